#include "efcp/compress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "efcp/rng.hpp"

namespace efcp {

kernels::BlockLayout SparseCompressed::layout() const {
  kernels::BlockLayout l;
  l.dim = dim;
  l.block_size = block_size;
  l.full_quota = per_block_count;
  const size_t nb = l.num_blocks();
  l.last_quota = static_cast<uint32_t>(indices.size() - (nb - 1) * per_block_count);
  return l;
}

SparseCompressed topk_block(std::span<const double> a, double density, uint32_t block_size) {
  if (a.empty()) throw std::invalid_argument("topk_block: empty input");
  const auto layout = kernels::BlockLayout::from_density(a.size(), block_size, density);

  SparseCompressed out;
  out.dim = a.size();
  out.block_size = block_size;
  out.per_block_count = layout.full_quota;
  out.indices.reserve(layout.entries_per_row());
  out.values.reserve(layout.entries_per_row());

  std::vector<uint32_t> scratch;
  for (size_t b = 0; b < layout.num_blocks(); ++b) {
    const size_t begin = layout.block_begin(b);
    const size_t end = layout.block_end(b);
    const size_t quota = layout.quota(b);

    scratch.resize(end - begin);
    std::iota(scratch.begin(), scratch.end(), static_cast<uint32_t>(begin));
    // largest magnitude first, lower index wins ties
    std::nth_element(scratch.begin(), scratch.begin() + (quota - 1), scratch.end(),
                     [&](uint32_t i, uint32_t j) {
                       const double ai = std::abs(a[i]);
                       const double aj = std::abs(a[j]);
                       return ai > aj || (ai == aj && i < j);
                     });
    std::sort(scratch.begin(), scratch.begin() + quota);
    for (size_t j = 0; j < quota; ++j) {
      out.indices.push_back(scratch[j]);
      out.values.push_back(a[scratch[j]]);
    }
  }
  return out;
}

SparseCompressed ef_step(ErrorFeedbackState& state, std::span<const double> g,
                         const Compressor& compress) {
  if (state.xi.size() != g.size()) {
    throw std::invalid_argument("ef_step: gradient dimension does not match state");
  }
  std::vector<double>& xi = state.xi;
  for (size_t i = 0; i < xi.size(); ++i) xi[i] += g[i];  // xi now holds the accumulator a
  SparseCompressed c = compress(xi);
  if (c.dim != xi.size()) {
    throw std::invalid_argument("ef_step: compressor changed the dimension");
  }
  for (size_t j = 0; j < c.indices.size(); ++j) xi[c.indices[j]] -= c.values[j];
  return c;
}

DenseMatrix unfold(std::span<const double> data, std::span<const size_t> shape) {
  if (shape.empty()) throw std::invalid_argument("unfold: empty shape");
  const size_t p1 = shape[0];
  size_t rest = 1;
  for (size_t i = 1; i < shape.size(); ++i) rest *= shape[i];
  if (p1 * rest != data.size()) throw std::invalid_argument("unfold: shape/data mismatch");
  DenseMatrix m(p1, rest);
  std::copy(data.begin(), data.end(), m.values().begin());
  return m;
}

DenseMatrix init_power_q(size_t p2s, size_t rank, uint64_t seed) {
  DenseMatrix q(p2s, rank);
  Rng rng(seed);
  for (size_t j = 0; j < rank; ++j) {
    for (size_t i = 0; i < p2s; ++i) q(i, j) = rng.normal();
  }
  return q;
}

LowRankCompressed power_compress(const DenseMatrix& unfolded,
                                 std::span<const size_t> original_shape,
                                 DenseMatrix& prev_q) {
  const size_t p1 = unfolded.rows();
  const size_t p2s = unfolded.cols();
  const size_t rank = prev_q.cols();
  if (prev_q.rows() != p2s) {
    throw std::invalid_argument("power_compress: prev_q rows do not match unfolded width");
  }
  if (rank < 1 || rank > std::min(p1, p2s)) {
    throw std::invalid_argument("power_compress: rank must be in [1, min(p1, p2s)]");
  }

  LowRankCompressed out;
  out.p = orthogonalize(matmul(unfolded, prev_q));
  out.q = matmul(transpose(unfolded), out.p);
  out.original_shape.assign(original_shape.begin(), original_shape.end());
  out.rank = rank;
  prev_q = out.q;  // warm start for the next call
  return out;
}

std::vector<double> densify(const SparseCompressed& c) {
  std::vector<double> out(c.dim, 0.0);
  for (size_t j = 0; j < c.indices.size(); ++j) out[c.indices[j]] = c.values[j];
  return out;
}

std::vector<double> densify(const LowRankCompressed& c) {
  const DenseMatrix full = matmul(c.p, transpose(c.q));
  return full.values();
}

}  // namespace efcp
