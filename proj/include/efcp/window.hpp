#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "efcp/compress.hpp"

namespace efcp {

// Ring buffer of the last m gradients, oldest evicted first. Implementations
// store rows densely or blockwise-sparse; the preconditioners only rely on
// this surface.
class IGradWindow {
 public:
  virtual ~IGradWindow() = default;

  virtual size_t capacity() const = 0;  // m
  virtual size_t dim() const = 0;       // d
  virtual size_t filled() const = 0;

  // Physical rows ordered oldest to newest.
  virtual std::vector<uint32_t> age_order() const = 0;

  // Returns the physical row that was (over)written.
  virtual size_t insert(const SparseCompressed& c) = 0;
  virtual size_t insert_dense(std::span<const double> g) = 0;

  // omega[r] = <row r, x> for every physical row; unoccupied rows give 0.
  virtual std::vector<double> sp(std::span<const double> x) const = 0;

  // sum_r coeff[r] * densify(row r) over occupied rows, coefficients indexed
  // by physical row; entries for unoccupied rows are ignored.
  virtual std::vector<double> lcg(std::span<const double> coeff) const = 0;

  // Bytes held by the window representation itself.
  virtual uint64_t storage_bytes() const = 0;
};

// Plain m x d ring buffer of 64-bit rows; the reference window.
class DenseGradWindow final : public IGradWindow {
 public:
  DenseGradWindow(size_t m, size_t d);

  size_t capacity() const override { return m_; }
  size_t dim() const override { return d_; }
  size_t filled() const override { return filled_; }
  std::vector<uint32_t> age_order() const override;

  size_t insert(const SparseCompressed& c) override;
  size_t insert_dense(std::span<const double> g) override;
  std::vector<double> sp(std::span<const double> x) const override;
  std::vector<double> lcg(std::span<const double> coeff) const override;
  uint64_t storage_bytes() const override;

  std::span<const double> row(size_t r) const { return {rows_.data() + r * d_, d_}; }

 private:
  size_t write_slot();

  size_t m_;
  size_t d_;
  std::vector<double> rows_;
  uint32_t next_row_ = 0;
  uint32_t filled_ = 0;
};

}  // namespace efcp
