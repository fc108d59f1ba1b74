#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace efcp {

// Row-major dense matrix of 64-bit reals. All preconditioner-internal
// arithmetic is done in this type; reduced-precision storage exists only in
// the gradient window.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  std::span<double> row(size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  DenseMatrix eigenvectors;         // column j pairs with eigenvalue j
};

// All m eigenpairs of a symmetric matrix via cyclic Jacobi rotations
// (off-diagonal threshold 1e-12 * ||A||_F, at most 100 sweeps).
// Throws std::invalid_argument for non-square input or when
// max |A_ij - A_ji| exceeds 1e-12.
EigenDecomposition sym_eig(const DenseMatrix& a);

// Modified Gram-Schmidt with re-orthogonalization. Columns whose residual
// norm falls below 1e-12 come back as zero columns; the others are
// orthonormal. Requires rows >= cols >= 1.
DenseMatrix orthogonalize(const DenseMatrix& p);

// Plumbing with deterministic, sequential accumulation per output element.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);
DenseMatrix transpose(const DenseMatrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace efcp
