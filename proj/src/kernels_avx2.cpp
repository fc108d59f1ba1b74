#include "kernels_impl.hpp"

#ifdef EFCP_HAVE_AVX2_SOURCES

#include <immintrin.h>

// SP is vectorized across four rows at a time (one row per lane) so every
// row still accumulates sequentially over its entries, and LCG is
// vectorized across four entries of one row, which touch four distinct
// output slots. Both use separate multiply and add, never FMA. That keeps
// each output bit-identical to the scalar variant.
namespace efcp::kernels::detail {

namespace {

inline __m256d load4_as_f64(const double* p, __m128i vindex) {
  return _mm256_i32gather_pd(p, vindex, 8);
}

inline __m256d load4_as_f64(const float* p, __m128i vindex) {
  return _mm256_cvtps_pd(_mm_i32gather_ps(p, vindex, 4));
}

template <typename V>
void sp_rows4(const uint32_t* idx, const V* vals, size_t row_begin, size_t row_end,
              size_t kprime, const double* x, double* out) {
  const int kp = static_cast<int>(kprime);
  const __m128i row_stride =
      _mm_set_epi32(3 * kp, 2 * kp, kp, 0);
  size_t r = row_begin;
  for (; r + 4 <= row_end; r += 4) {
    const uint32_t* ri = idx + r * kprime;
    const V* rv = vals + r * kprime;
    __m256d acc = _mm256_setzero_pd();
    for (size_t j = 0; j < kprime; ++j) {
      const __m128i idx4 = _mm_i32gather_epi32(
          reinterpret_cast<const int*>(ri + j), row_stride, 4);
      const __m256d xv = _mm256_i32gather_pd(x, idx4, 8);
      const __m256d vv = load4_as_f64(rv + j, row_stride);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(vv, xv));
    }
    _mm256_storeu_pd(out + r, acc);
  }
  // remaining rows
  for (; r < row_end; ++r) {
    const uint32_t* ri = idx + r * kprime;
    const V* rv = vals + r * kprime;
    double acc = 0.0;
    for (size_t j = 0; j < kprime; ++j) {
      acc += static_cast<double>(rv[j]) * x[ri[j]];
    }
    out[r] = acc;
  }
}

inline __m256d load4_vals(const double* p) { return _mm256_loadu_pd(p); }
inline __m256d load4_vals(const float* p) { return _mm256_cvtps_pd(_mm_loadu_ps(p)); }

template <typename V>
void lcg_block_range4(const uint32_t* idx, const V* vals, size_t kprime,
                      const uint32_t* rows, const double* coeff, size_t nrows,
                      const BlockLayout& layout, size_t block_begin, size_t block_end,
                      double* out) {
  for (size_t b = block_begin; b < block_end; ++b) {
    const size_t off = layout.entry_offset(b);
    const size_t q = layout.quota(b);
    for (size_t r = 0; r < nrows; ++r) {
      const size_t base = static_cast<size_t>(rows[r]) * kprime + off;
      const double c = coeff[r];
      const __m256d cv = _mm256_set1_pd(c);
      size_t j = 0;
      for (; j + 4 <= q; j += 4) {
        const __m128i idx4 =
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + base + j));
        const __m256d vv = load4_vals(vals + base + j);
        const __m256d cur = _mm256_i32gather_pd(out, idx4, 8);
        const __m256d sum = _mm256_add_pd(cur, _mm256_mul_pd(cv, vv));
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, sum);
        out[idx[base + j + 0]] = tmp[0];
        out[idx[base + j + 1]] = tmp[1];
        out[idx[base + j + 2]] = tmp[2];
        out[idx[base + j + 3]] = tmp[3];
      }
      for (; j < q; ++j) {
        out[idx[base + j]] += c * static_cast<double>(vals[base + j]);
      }
    }
  }
}

}  // namespace

void sp_avx2_f64(const uint32_t* idx, const double* vals, size_t m, size_t kprime,
                 const double* x, double* out) {
  parallel_chunks(m, [&](size_t lo, size_t hi) { sp_rows4(idx, vals, lo, hi, kprime, x, out); });
}

void sp_avx2_f32(const uint32_t* idx, const float* vals, size_t m, size_t kprime,
                 const double* x, double* out) {
  parallel_chunks(m, [&](size_t lo, size_t hi) { sp_rows4(idx, vals, lo, hi, kprime, x, out); });
}

void lcg_avx2_f64(const uint32_t* idx, const double* vals, size_t kprime,
                  const uint32_t* rows, const double* coeff, size_t nrows,
                  const BlockLayout& layout, double* out) {
  parallel_chunks(layout.num_blocks(), [&](size_t lo, size_t hi) {
    lcg_block_range4(idx, vals, kprime, rows, coeff, nrows, layout, lo, hi, out);
  });
}

void lcg_avx2_f32(const uint32_t* idx, const float* vals, size_t kprime,
                  const uint32_t* rows, const double* coeff, size_t nrows,
                  const BlockLayout& layout, double* out) {
  parallel_chunks(layout.num_blocks(), [&](size_t lo, size_t hi) {
    lcg_block_range4(idx, vals, kprime, rows, coeff, nrows, layout, lo, hi, out);
  });
}

}  // namespace efcp::kernels::detail

#endif  // EFCP_HAVE_AVX2_SOURCES
