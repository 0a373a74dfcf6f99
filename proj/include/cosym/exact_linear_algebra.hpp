#pragma once

// Exact rank and linear solves over the rationals, backed by Eigen's full-pivoting
// LU with a zero threshold (a pivot counts as nonzero iff it is nonzero).

#include "cosym/rational.hpp"

#include <Eigen/LU>

#include <optional>

namespace cosym {

template <typename Scalar>
Eigen::FullPivLU<MatrixX<Scalar>> exact_lu(const MatrixX<Scalar>& a) {
  Eigen::FullPivLU<MatrixX<Scalar>> lu(a.rows(), a.cols());
  lu.setThreshold(Scalar(0));
  lu.compute(a);
  return lu;
}

template <typename Scalar>
int exact_rank(const MatrixX<Scalar>& a) {
  if (a.size() == 0) return 0;
  return static_cast<int>(exact_lu(a).rank());
}

/// The solution x of a x = b when b lies in the column space of a, which must have
/// full column rank; nullopt otherwise.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solve_in_span(const MatrixX<Scalar>& a,
                                                                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  const auto lu = exact_lu(a);
  if (lu.rank() != a.cols()) return std::nullopt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x = lu.solve(b);
  if (!((a * x - b).isZero(Scalar(0)))) return std::nullopt;
  return x;
}

}  // namespace cosym
