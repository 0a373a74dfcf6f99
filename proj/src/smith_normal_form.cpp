#include "cosym/smith_normal_form.hpp"

#include <utility>

namespace cosym {
namespace {

using Index = Eigen::Index;

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Position of a nonzero entry of smallest absolute value in the block [t.., t..].
bool find_pivot(const IntMatrix& m, Index t, Index& row, Index& col) {
  bool found = false;
  BigInt best;
  for (Index j = t; j < m.cols(); ++j) {
    for (Index i = t; i < m.rows(); ++i) {
      if (m(i, j) == 0) continue;
      const BigInt a = abs_value(m(i, j));
      if (!found || a < best) {
        best = a;
        row = i;
        col = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<BigInt> SmithResult::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult result;
  const Index limit = std::min(m.rows(), m.cols());
  for (Index t = 0; t < limit; ++t) {
    Index pr = 0;
    Index pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    m.row(t).swap(m.row(pr));
    m.col(t).swap(m.col(pc));

    while (true) {
      bool clean = true;
      // clear column t below the pivot
      for (Index i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = m(i, t) / m(t, t);
        for (Index j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) {
          m.row(t).swap(m.row(i));  // remainder is smaller than the pivot
          clean = false;
        }
      }
      // clear row t right of the pivot
      for (Index j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = m(t, j) / m(t, t);
        for (Index i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          m.col(t).swap(m.col(j));
          clean = false;
        }
      }
      if (!clean) continue;
      // the pivot must divide the remaining block
      bool divides = true;
      for (Index i = t + 1; i < m.rows() && divides; ++i) {
        for (Index j = t + 1; j < m.cols(); ++j) {
          if (m(i, j) % m(t, t) != 0) {
            m.row(t) += m.row(i);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    result.invariant_factors.push_back(abs_value(m(t, t)));
  }
  return result;
}

}  // namespace cosym
