#pragma once

// Conversions between the library's types and the oracle representations.

#include "cosym/graded_operator.hpp"
#include "cosym/multivector.hpp"
#include "cosym/rational.hpp"
#include "oracles/model_oracle.hpp"

#include <stdexcept>

namespace testing_support {

using cosym::Blade;
using cosym::Rational;

inline oracle::Frac to_frac(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return oracle::Frac(numerator(q).convert_to<long long>(), denominator(q).convert_to<long long>());
}

inline Rational to_rational(const oracle::Frac& f) { return Rational(f.numerator()) / Rational(f.denominator()); }

inline oracle::Form to_form(const cosym::Multivector<Rational>& w) {
  oracle::Form out;
  for (const auto& [b, c] : w.terms()) oracle::add(out, b.indices(), to_frac(c));
  return out;
}

inline cosym::Multivector<Rational> from_form(const oracle::Form& f) {
  cosym::Multivector<Rational> out;
  for (const auto& [idx, c] : f) out.add(Blade::from_indices(idx), to_rational(c));
  return out;
}

inline oracle::Vec to_vec(const cosym::KVector<Rational>& v) {
  oracle::Vec out;
  for (const auto& [b, c] : v.terms()) out[b.indices().front()] = to_frac(c);
  return out;
}

/// Dense integer copy of the degree-k block of an operator.
inline oracle::IntMat dense_block(const cosym::GradedOperator<Rational>& op, int k) {
  const auto& b = op.block(k);
  oracle::IntMat out(b.rows(), std::vector<long long>(b.cols(), 0));
  for (int j = 0; j < b.outerSize(); ++j) {
    for (cosym::SparseMatrix<Rational>::InnerIterator it(b, j); it; ++it) {
      const oracle::Frac f = to_frac(it.value());
      if (f.denominator() != 1) throw std::logic_error("non-integral operator entry");
      out[it.row()][j] = f.numerator();
    }
  }
  return out;
}

}  // namespace testing_support
