#include "efcp/window.hpp"

#include <algorithm>
#include <stdexcept>

#include "efcp/kernels.hpp"

namespace efcp {

DenseGradWindow::DenseGradWindow(size_t m, size_t d) : m_(m), d_(d), rows_(m * d, 0.0) {
  if (m == 0 || d == 0) throw std::invalid_argument("window: m and d must be >= 1");
}

std::vector<uint32_t> DenseGradWindow::age_order() const {
  std::vector<uint32_t> order(filled_);
  for (size_t i = 0; i < filled_; ++i) {
    order[i] = static_cast<uint32_t>((next_row_ + m_ - filled_ + i) % m_);
  }
  return order;
}

size_t DenseGradWindow::write_slot() {
  const size_t slot = next_row_;
  next_row_ = static_cast<uint32_t>((next_row_ + 1) % m_);
  filled_ = static_cast<uint32_t>(std::min<size_t>(filled_ + 1, m_));
  return slot;
}

size_t DenseGradWindow::insert(const SparseCompressed& c) {
  if (c.dim != d_) throw std::invalid_argument("window insert: dimension mismatch");
  const size_t slot = write_slot();
  double* row = rows_.data() + slot * d_;
  std::fill(row, row + d_, 0.0);
  for (size_t j = 0; j < c.indices.size(); ++j) row[c.indices[j]] = c.values[j];
  return slot;
}

size_t DenseGradWindow::insert_dense(std::span<const double> g) {
  if (g.size() != d_) throw std::invalid_argument("window insert: dimension mismatch");
  const size_t slot = write_slot();
  std::copy(g.begin(), g.end(), rows_.begin() + slot * d_);
  return slot;
}

std::vector<double> DenseGradWindow::sp(std::span<const double> x) const {
  if (x.size() != d_) throw std::invalid_argument("sp: dimension mismatch");
  std::vector<double> out(m_, 0.0);
  kernels::parallel_chunks(m_, [&](size_t lo, size_t hi) {
    for (size_t r = lo; r < hi; ++r) {
      const double* row = rows_.data() + r * d_;
      double acc = 0.0;
      for (size_t i = 0; i < d_; ++i) acc += row[i] * x[i];
      out[r] = acc;
    }
  });
  return out;
}

std::vector<double> DenseGradWindow::lcg(std::span<const double> coeff) const {
  if (coeff.size() != m_) throw std::invalid_argument("lcg: coefficient count mismatch");
  std::vector<double> out(d_, 0.0);
  const auto order = age_order();
  // parallel over output slices, rows accumulated oldest to newest
  kernels::parallel_chunks(d_, [&](size_t lo, size_t hi) {
    for (const uint32_t r : order) {
      const double c = coeff[r];
      const double* row = rows_.data() + r * d_;
      for (size_t i = lo; i < hi; ++i) out[i] += c * row[i];
    }
  });
  return out;
}

uint64_t DenseGradWindow::storage_bytes() const {
  return static_cast<uint64_t>(m_) * d_ * sizeof(double);
}

}  // namespace efcp
