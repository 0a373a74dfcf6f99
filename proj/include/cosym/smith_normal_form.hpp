#pragma once

#include "cosym/rational.hpp"

#include <vector>

namespace cosym {

using IntMatrix = MatrixX<BigInt>;

struct SmithResult {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> invariant_factors;
  int rank() const { return static_cast<int>(invariant_factors.size()); }
  /// The invariant factors greater than one.
  std::vector<BigInt> torsion() const;
};

/// Smith normal form by unimodular row and column operations, in arbitrary precision.
SmithResult smith_normal_form(IntMatrix m);

}  // namespace cosym
