#pragma once

// Exact scalar types. Everything in the core is templated on the scalar; these
// are the instantiations used by the tools and the verification suites.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>

namespace cosym {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

/// Drops explicitly stored zeros. Exact arithmetic produces them on cancellation.
template <typename Scalar>
void prune_zeros(SparseMatrix<Scalar>& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Scalar& v) { return v != Scalar(0); });
}

}  // namespace cosym
