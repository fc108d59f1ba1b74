#include "kernels_impl.hpp"

namespace efcp::kernels::detail {

namespace {

template <typename V>
void sp_rows(const uint32_t* idx, const V* vals, size_t row_begin, size_t row_end,
             size_t kprime, const double* x, double* out) {
  for (size_t r = row_begin; r < row_end; ++r) {
    const uint32_t* ri = idx + r * kprime;
    const V* rv = vals + r * kprime;
    double acc = 0.0;
    for (size_t j = 0; j < kprime; ++j) {
      acc += static_cast<double>(rv[j]) * x[ri[j]];
    }
    out[r] = acc;
  }
}

template <typename V>
void lcg_block_range(const uint32_t* idx, const V* vals, size_t kprime,
                     const uint32_t* rows, const double* coeff, size_t nrows,
                     const BlockLayout& layout, size_t block_begin, size_t block_end,
                     double* out) {
  for (size_t b = block_begin; b < block_end; ++b) {
    const size_t off = layout.entry_offset(b);
    const size_t q = layout.quota(b);
    for (size_t r = 0; r < nrows; ++r) {
      const size_t base = static_cast<size_t>(rows[r]) * kprime + off;
      const double c = coeff[r];
      for (size_t j = 0; j < q; ++j) {
        out[idx[base + j]] += c * static_cast<double>(vals[base + j]);
      }
    }
  }
}

}  // namespace

void sp_scalar_f64(const uint32_t* idx, const double* vals, size_t m, size_t kprime,
                   const double* x, double* out) {
  parallel_chunks(m, [&](size_t lo, size_t hi) { sp_rows(idx, vals, lo, hi, kprime, x, out); });
}

void sp_scalar_f32(const uint32_t* idx, const float* vals, size_t m, size_t kprime,
                   const double* x, double* out) {
  parallel_chunks(m, [&](size_t lo, size_t hi) { sp_rows(idx, vals, lo, hi, kprime, x, out); });
}

void lcg_scalar_f64(const uint32_t* idx, const double* vals, size_t kprime,
                    const uint32_t* rows, const double* coeff, size_t nrows,
                    const BlockLayout& layout, double* out) {
  parallel_chunks(layout.num_blocks(), [&](size_t lo, size_t hi) {
    lcg_block_range(idx, vals, kprime, rows, coeff, nrows, layout, lo, hi, out);
  });
}

void lcg_scalar_f32(const uint32_t* idx, const float* vals, size_t kprime,
                    const uint32_t* rows, const double* coeff, size_t nrows,
                    const BlockLayout& layout, double* out) {
  parallel_chunks(layout.num_blocks(), [&](size_t lo, size_t hi) {
    lcg_block_range(idx, vals, kprime, rows, coeff, nrows, layout, lo, hi, out);
  });
}

}  // namespace efcp::kernels::detail
