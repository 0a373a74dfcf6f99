#pragma once

// Betti-number arithmetic for compact 3-cosymplectic manifolds of dimension 4n+3:
// the transform from horizontal to full Betti numbers, divisibility and lower-bound
// constraints, and the rank of the products Xi_1^k1 ^ Xi_2^k2 ^ Xi_3^k3.

#include "cosym/blade.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cosym {

using Count = std::int64_t;

/// C(n, k), zero outside 0 <= k <= n.
Count binomial(int n, int k);

/// b^h_0 .. b^h_{4n}; entries outside the range read as zero.
class HorizontalBettiSequence {
 public:
  /// Throws std::invalid_argument unless values has 4n+1 nonnegative entries.
  HorizontalBettiSequence(int n, std::vector<Count> values);

  int n() const { return n_; }
  const std::vector<Count>& values() const { return values_; }
  Count at(int k) const;

 private:
  int n_;
  std::vector<Count> values_;
};

/// b_0 .. b_{4n+3}.
class BettiSequence {
 public:
  explicit BettiSequence(std::vector<Count> values);

  const std::vector<Count>& values() const { return values_; }
  Count at(int k) const;
  int top_degree() const { return static_cast<int>(values_.size()) - 1; }
  Count total() const;
  Count euler_characteristic() const;
  bool is_palindromic() const;

  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;

 private:
  std::vector<Count> values_;
};

/// Polynomial in t with integer coefficients, lowest degree first. Trailing zeros are
/// trimmed.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(std::vector<Count> coefficients);

  static PoincareSeries one() { return PoincareSeries({1}); }
  /// (1 + t)^k.
  static PoincareSeries binomial_power(int k);

  const std::vector<Count>& coefficients() const { return coefficients_; }
  Count at(int k) const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

 private:
  std::vector<Count> coefficients_;
};

PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b);

/// b_k = b^h_k + 3 b^h_{k-1} + 3 b^h_{k-2} + b^h_{k-3}.
BettiSequence betti_from_horizontal(const HorizontalBettiSequence& bh);

struct ConstraintCheck {
  enum class Severity { error, warning };

  std::string name;   // "divisibility", "lower_bound", "horizontal_divisibility", ...
  int k = 0;
  Count value = 0;    // the quantity being tested
  Count margin = 0;   // value - bound for bounds, residue mod 4 for divisibility
  bool passed = false;
  Severity severity = Severity::error;
  std::string statement;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;

  /// False iff some error-severity check failed, or any check failed when strict.
  bool passed(bool strict = false) const;
  std::vector<ConstraintCheck> failures(bool strict = false) const;
};

/// b_{k-1} + b_k divisible by 4 for every odd k.
ConstraintReport check_divisibility(const BettiSequence& b);

/// b_k >= C(k+2, 2) for 0 <= k <= 2n+1.
ConstraintReport check_bounds(const BettiSequence& b, int n);

/// b^h_k divisible by 4 for odd k, and b^h_{2k} >= C(k+2, 2) for 0 <= k <= n.
/// Also reports b^h_k = b^h_{4n-k} as warnings.
ConstraintReport check_horizontal_constraints(const HorizontalBettiSequence& bh);

struct SkRankResult {
  int n = 0;
  int k = 0;
  int products = 0;            // number of triples k1 + k2 + k3 = k
  int rank = 0;                // exact rank of the products
  std::vector<Blade> leading;  // lex-leading blade of each product, in triple order
  bool leading_distinct = false;
};

/// Builds every Xi_1^k1 ^ Xi_2^k2 ^ Xi_3^k3 with k1 + k2 + k3 = k in the rank-n model.
/// Throws std::out_of_range unless 0 <= k <= n.
SkRankResult s_k_rank(int n, int k);

}  // namespace cosym
