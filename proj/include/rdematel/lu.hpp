#pragma once

// Dense LU with partial pivoting for the small square systems DEMATEL
// produces. Eigen's PartialPivLU never reports a vanishing pivot, so the
// factorization is done here to surface singularity as an error.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rdematel/errors.hpp"

namespace rdematel {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Pivots smaller than this in magnitude are treated as zero.
inline constexpr double kPivotTolerance = 1e-12;

template <typename Scalar>
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix<Scalar>& a) : lu_(a) {
    if (a.rows() != a.cols()) throw ShapeError("LU of a non-square matrix");
    const Eigen::Index n = a.rows();
    perm_.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;

    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index pivot_row;
      Scalar pivot = lu_.col(k).tail(n - k).cwiseAbs().maxCoeff(&pivot_row);
      pivot_row += k;
      if (!(pivot >= Scalar(kPivotTolerance))) {
        throw SingularMatrix("singular matrix: pivot " + std::to_string(k) +
                                 " has magnitude below tolerance",
                             static_cast<long>(k));
      }
      if (pivot_row != k) {
        lu_.row(k).swap(lu_.row(pivot_row));
        std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(pivot_row)]);
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        lu_.row(i).tail(n - k - 1) -= lu_(i, k) * lu_.row(k).tail(n - k - 1);
      }
    }
  }

  /// Solves A x = b.
  Vector<Scalar> solve(const Vector<Scalar>& b) const {
    const Eigen::Index n = lu_.rows();
    if (b.size() != n) throw ShapeError("right-hand side size mismatch");
    Vector<Scalar> x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = b[perm_[static_cast<std::size_t>(i)]];
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      for (Eigen::Index j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

  Matrix<Scalar> inverse() const {
    const Eigen::Index n = lu_.rows();
    Matrix<Scalar> inv(n, n);
    Vector<Scalar> e = Vector<Scalar>::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      e[j] = Scalar(1);
      inv.col(j) = solve(e);
      e[j] = Scalar(0);
    }
    return inv;
  }

  Scalar determinant() const {
    Scalar det = lu_.diagonal().prod();
    // parity of the permutation
    std::vector<Eigen::Index> p = perm_;
    int swaps = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      while (p[i] != static_cast<Eigen::Index>(i)) {
        std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
        ++swaps;
      }
    }
    return swaps % 2 ? -det : det;
  }

 private:
  Matrix<Scalar> lu_;
  std::vector<Eigen::Index> perm_;
};

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  return LuDecomposition<Scalar>(a).inverse();
}

}  // namespace rdematel
