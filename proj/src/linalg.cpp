#include "efcp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace efcp {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  const size_t n = a.rows();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      s += 2.0 * a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition sym_eig(const DenseMatrix& input) {
  const size_t n = input.rows();
  if (n == 0 || input.cols() != n) {
    throw std::invalid_argument("sym_eig: matrix must be square and non-empty");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) > 1e-12) {
        throw std::invalid_argument("sym_eig: input is not symmetric");
      }
    }
  }

  DenseMatrix a = input;
  DenseMatrix q = DenseMatrix::identity(n);
  const double stop = 1e-12 * frobenius_norm(a);
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > stop; ++sweep) {
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double app = a(p, p);
        const double arr = a(r, r);
        // rotation angle that zeroes the (p, r) entry
        const double theta = (arr - app) / (2.0 * apr);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }

  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](size_t i, size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n);
  for (size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(perm[j], perm[j]);
    for (size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, j) = q(i, perm[j]);
    }
  }
  return out;
}

DenseMatrix orthogonalize(const DenseMatrix& p) {
  const size_t n = p.rows();
  const size_t r = p.cols();
  if (r < 1 || n < r) {
    throw std::invalid_argument("orthogonalize: need rows >= cols >= 1");
  }
  constexpr double kResidualFloor = 1e-12;

  DenseMatrix q = p;
  // Two MGS passes; the second one restores orthogonality lost to rounding
  // on ill-conditioned input.
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t j = 0; j < r; ++j) {
      for (size_t i = 0; i < j; ++i) {
        double proj = 0.0;
        for (size_t k = 0; k < n; ++k) proj += q(k, i) * q(k, j);
        for (size_t k = 0; k < n; ++k) q(k, j) -= proj * q(k, i);
      }
      double nrm = 0.0;
      for (size_t k = 0; k < n; ++k) nrm += q(k, j) * q(k, j);
      nrm = std::sqrt(nrm);
      if (nrm < kResidualFloor) {
        for (size_t k = 0; k < n; ++k) q(k, j) = 0.0;  // degenerate direction
      } else {
        for (size_t k = 0; k < n; ++k) q(k, j) /= nrm;
      }
    }
  }
  return q;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<double> out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out[i] = acc;
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace efcp
