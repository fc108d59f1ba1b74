#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace efcp::kernels {

// Uniform blockwise sparsity layout shared by the compressor and the sparse
// ring buffer. Every row of the window keeps the same per-block quota:
// `full_quota` entries per block of `block_size`, and a proportional quota
// for the final partial block. Entries of block b occupy the contiguous
// column range [entry_offset(b), entry_offset(b) + quota(b)) of a row.
struct BlockLayout {
  size_t dim = 0;            // d
  uint32_t block_size = 0;   // B_d
  uint32_t full_quota = 0;   // entries kept per full block
  uint32_t last_quota = 0;   // entries kept in the final (possibly partial) block

  static BlockLayout from_density(size_t dim, uint32_t block_size, double density);

  size_t num_blocks() const { return (dim + block_size - 1) / block_size; }
  size_t block_begin(size_t b) const { return b * static_cast<size_t>(block_size); }
  size_t block_end(size_t b) const {
    const size_t e = block_begin(b) + block_size;
    return e < dim ? e : dim;
  }
  uint32_t quota(size_t b) const {
    return b + 1 == num_blocks() ? last_quota : full_quota;
  }
  size_t entry_offset(size_t b) const { return b * static_cast<size_t>(full_quota); }
  size_t entries_per_row() const {
    const size_t nb = num_blocks();
    return (nb - 1) * static_cast<size_t>(full_quota) + last_quota;
  }

  bool operator==(const BlockLayout&) const = default;
};

enum class Backend { Scalar, Avx2 };

bool avx2_supported();
Backend active_backend();
// Throws std::invalid_argument when the requested backend is not available
// on this machine.
void set_backend(Backend b);
Backend backend_from_name(const std::string& name);  // "auto" | "scalar" | "avx2"
std::string backend_name(Backend b);

// Worker count used by the data-parallel kernels. Results are identical for
// any value; this only changes how work is partitioned.
int threads();
void set_threads(int n);

// Runs fn(begin, end) over a fixed partition of [0, count) into contiguous
// chunks, one chunk per worker. The partition depends only on `count` and
// the worker count, and every output element is owned by exactly one chunk.
void parallel_chunks(size_t count, const std::function<void(size_t, size_t)>& fn);

// --- SP: per-row sparse dot products -----------------------------------
// out[r] = sum_j vals[r*kprime+j] * x[idx[r*kprime+j]] for all m rows,
// where x has `dim` entries. Accumulation runs in ascending j per row in
// 64-bit, for every backend.
void sp(const uint32_t* idx, const double* vals, size_t m, size_t kprime,
        const double* x, size_t dim, double* out);
void sp(const uint32_t* idx, const float* vals, size_t m, size_t kprime,
        const double* x, size_t dim, double* out);

// --- LCG: blockwise linear combination of sparse rows ------------------
// out = sum_r coeff[r] * densify(row rows[r]), accumulated block by block
// with rows visited in the given order and entries in ascending index, so
// the result is independent of the worker count. `out` must hold `dim`
// zeros on entry.
void lcg(const uint32_t* idx, const double* vals, size_t kprime,
         const uint32_t* rows, const double* coeff, size_t nrows,
         const BlockLayout& layout, double* out);
void lcg(const uint32_t* idx, const float* vals, size_t kprime,
         const uint32_t* rows, const double* coeff, size_t nrows,
         const BlockLayout& layout, double* out);

}  // namespace efcp::kernels
