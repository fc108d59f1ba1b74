#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "efcp/kernels.hpp"
#include "efcp/linalg.hpp"

namespace efcp {

// Blockwise-sparse vector: indices strictly increasing, every full block of
// `block_size` holds exactly `per_block_count` entries and the final
// partial block a proportionally rounded quota.
struct SparseCompressed {
  std::vector<uint32_t> indices;
  std::vector<double> values;
  size_t dim = 0;
  uint32_t block_size = 0;
  uint32_t per_block_count = 0;

  kernels::BlockLayout layout() const;
};

// Low-rank factor pair: the unfolded tensor is approximated by P * Q^T and
// reshaped back to original_shape.
struct LowRankCompressed {
  DenseMatrix p;  // p1 x rank
  DenseMatrix q;  // p2s x rank
  std::vector<size_t> original_shape;
  size_t rank = 0;

  size_t p1() const { return p.rows(); }
  size_t p2s() const { return q.rows(); }
};

struct ErrorFeedbackState {
  std::vector<double> xi;

  explicit ErrorFeedbackState(size_t dim) : xi(dim, 0.0) {}
};

using Compressor = std::function<SparseCompressed(std::span<const double>)>;

// Keeps, per block of size block_size, the max(1, round(density * width))
// entries of largest magnitude; ties go to the lower index. Values are
// copied exactly, never rescaled.
SparseCompressed topk_block(std::span<const double> a, double density, uint32_t block_size);

// One error-feedback step: a = xi + g, c = compress(a), xi = a - densify(c).
SparseCompressed ef_step(ErrorFeedbackState& state, std::span<const double> g,
                         const Compressor& compress);

// Single power-iteration pass over the unfolded tensor. prev_q (p2s x rank)
// is replaced by the new right factor for the next call.
LowRankCompressed power_compress(const DenseMatrix& unfolded,
                                 std::span<const size_t> original_shape,
                                 DenseMatrix& prev_q);

// Seeded standard-normal right-factor init, filled column by column so that
// a smaller rank yields a prefix of a larger one.
DenseMatrix init_power_q(size_t p2s, size_t rank, uint64_t seed);

// Unfold a tensor into p1 x prod(rest); 1-D shapes become p1 x 1.
DenseMatrix unfold(std::span<const double> data, std::span<const size_t> shape);

std::vector<double> densify(const SparseCompressed& c);
std::vector<double> densify(const LowRankCompressed& c);  // P Q^T, row-major flat

}  // namespace efcp
