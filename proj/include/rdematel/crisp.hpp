#pragma once

// Classic crisp DEMATEL: average the expert matrices, normalize by the
// largest row sum, close over indirect paths with T = D (I - D)^-1, and
// read off row/column sums.

#include <span>
#include <vector>

#include "rdematel/lu.hpp"

namespace rdematel {

/// Checks the direct-relation invariants: square, zero diagonal,
/// nonnegative entries.
template <typename Derived>
void check_direct_matrix(const Eigen::MatrixBase<Derived>& z) {
  if (z.rows() != z.cols()) throw ShapeError("direct-relation matrix is not square");
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    if (z(i, i) != 0) {
      throw InvalidArgument("nonzero diagonal at " + std::to_string(i));
    }
  }
  if ((z.array() < 0).any()) throw InvalidArgument("negative influence entry");
}

/// Entrywise mean of the experts' matrices.
template <typename Scalar>
Matrix<Scalar> average_expert_matrices(std::span<const Matrix<Scalar>> matrices) {
  if (matrices.empty()) throw InvalidArgument("no expert matrices to average");
  const auto n = matrices.front().rows();
  Matrix<Scalar> sum = Matrix<Scalar>::Zero(n, n);
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n) {
      throw ShapeError("expert matrices differ in dimension");
    }
    check_direct_matrix(m);
    sum += m;
  }
  return sum / static_cast<Scalar>(matrices.size());
}

template <typename Scalar>
Matrix<Scalar> average_expert_matrices(const std::vector<Matrix<Scalar>>& matrices) {
  return average_expert_matrices(std::span<const Matrix<Scalar>>(matrices));
}

/// Normalizing factor S = 1 / (largest row sum).
template <typename Derived>
typename Derived::Scalar normalization_factor(const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  Scalar max_row = z.rowwise().sum().maxCoeff();
  if (!(max_row > Scalar(0))) {
    throw DegenerateInput("direct-relation matrix has no positive row sum");
  }
  return Scalar(1) / max_row;
}

/// D = S * Z, so that the largest row sum of D is 1.
template <typename Derived>
Matrix<typename Derived::Scalar> normalize_crisp(const Eigen::MatrixBase<Derived>& z) {
  check_direct_matrix(z);
  return z * normalization_factor(z);
}

/// T = D (I - D)^-1, the sum of D^k over k >= 1.
template <typename Derived>
Matrix<typename Derived::Scalar> total_relation_crisp(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  if (d.rows() != d.cols()) throw ShapeError("total relation of a non-square matrix");
  const auto n = d.rows();
  Matrix<Scalar> i_minus_d = Matrix<Scalar>::Identity(n, n) - d;
  return d * inverse<Scalar>(i_minus_d);
}

/// Row sums R (influence given) and column sums D (influence received).
template <typename Scalar>
struct CrispScores {
  Vector<Scalar> given;     // R_i
  Vector<Scalar> received;  // D_j

  Vector<Scalar> prominence() const { return given + received; }
  Vector<Scalar> relation() const { return given - received; }
};

template <typename Derived>
CrispScores<typename Derived::Scalar> crisp_scores(const Eigen::MatrixBase<Derived>& t) {
  return {t.rowwise().sum(), t.colwise().sum().transpose()};
}

/// Whole crisp pipeline from one already-averaged direct matrix.
template <typename Scalar>
struct CrispAnalysis {
  Matrix<Scalar> normalized;
  Matrix<Scalar> total;
  CrispScores<Scalar> scores;
};

template <typename Derived>
CrispAnalysis<typename Derived::Scalar> crisp_dematel(const Eigen::MatrixBase<Derived>& z) {
  CrispAnalysis<typename Derived::Scalar> out;
  out.normalized = normalize_crisp(z);
  out.total = total_relation_crisp(out.normalized);
  out.scores = crisp_scores(out.total);
  return out;
}

}  // namespace rdematel
