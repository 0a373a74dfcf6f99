#pragma once

// Cellular homology of M^7_f = (T^4 x R^3) / Z^3, where the generator of the t-th
// flat direction acts on T^4 = H / Z^4 by right multiplication by i.
//
// The cube [0,1]^7 with coordinates 1..4 (quaternion directions 1, i, j, k) and 5..7
// (flat directions) descends to a CW structure with one k-cell per k-subset of
// {1..7}. Crossing a flat face identifies (x, 1) with (f^{-1} x, 0).

#include "cosym/betti.hpp"
#include "cosym/smith_normal_form.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosym {

/// A subset of {1..7}; dimension = size.
class Cell {
 public:
  constexpr Cell() = default;
  /// Throws std::invalid_argument for labels outside 1..7 or repeated labels.
  static Cell from_labels(std::initializer_list<int> labels);
  static Cell from_labels(const std::vector<int>& labels);
  static constexpr Cell from_mask(std::uint8_t mask) { return Cell(mask); }

  constexpr std::uint8_t mask() const { return mask_; }
  int dimension() const;
  bool contains(int label) const { return (mask_ >> (label - 1)) & 1u; }
  std::vector<int> labels() const;
  std::string name() const;  // e.g. "{3,5}"

  /// By dimension, then lexicographically on the sorted labels.
  friend bool operator<(Cell a, Cell b);
  friend constexpr bool operator==(Cell, Cell) = default;

 private:
  constexpr explicit Cell(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

/// A signed permutation of the quaternion coordinate labels 1..4.
class TwistMap {
 public:
  struct Image {
    int label = 0;
    int sign = 1;
  };

  /// Throws std::invalid_argument unless the targets are a permutation of 1..4 and
  /// the signs are +-1.
  explicit TwistMap(std::array<Image, 4> images);

  /// q -> q i on H = R^4 with basis (1, i, j, k).
  static TwistMap right_multiplication_by_i();
  static TwistMap identity();

  Image operator()(int label) const;
  TwistMap inverse() const;
  TwistMap then(const TwistMap& next) const;  // next after this
  TwistMap power(int k) const;
  int determinant() const;
  /// Negative-control hook: flips the sign of one image.
  TwistMap with_sign_flip(int label) const;

  /// Image of a set of quaternion labels as an oriented cell: the sign collects the
  /// signs of the images and the sign of the sorting permutation.
  std::pair<int, std::uint8_t> apply_to_labels(std::uint8_t quaternion_mask) const;

  friend bool operator==(const TwistMap& a, const TwistMap& b);

 private:
  std::array<Image, 4> images_;
};

/// Raised when the boundary operator fails to square to zero.
class BoundaryError : public std::logic_error {
 public:
  BoundaryError(Cell cell, Cell face, const std::string& what) : std::logic_error(what), cell_(cell), face_(face) {}
  Cell cell() const { return cell_; }
  Cell face() const { return face_; }

 private:
  Cell cell_;
  Cell face_;
};

using Chain = std::map<Cell, BigInt>;

/// The cellular chain complex of M^7_f for a given twist.
class ChainComplexZ {
 public:
  /// Builds all cells and boundary matrices; throws BoundaryError if d^2 != 0.
  static ChainComplexZ build(const TwistMap& twist = TwistMap::right_multiplication_by_i());

  static constexpr int kTop = 7;

  const TwistMap& twist() const { return twist_; }
  const std::vector<Cell>& cells(int k) const { return cells_.at(k); }
  int index_of(Cell c) const;

  /// d_k: columns are k-cells, rows are (k-1)-cells, for 1 <= k <= 7.
  const IntMatrix& boundary_matrix(int k) const { return boundary_.at(k); }

  /// Sum over s in S (1-based position p) of (-1)^(p+1) (face at 1 - face at 0).
  Chain boundary(Cell s) const;
  /// Coefficient of t in the boundary of s.
  BigInt degree(Cell s, Cell t) const;

  /// First (cell, face) with a nonzero coefficient in d(d(cell)).
  std::optional<std::pair<Cell, Cell>> boundary_squared_witness() const;

 private:
  explicit ChainComplexZ(const TwistMap& twist);

  TwistMap twist_;
  std::array<std::vector<Cell>, kTop + 1> cells_;
  std::array<IntMatrix, kTop + 1> boundary_;  // boundary_[0] is empty
};

/// Plain text "row col value" lines for the nonzero entries of an integer matrix.
std::string to_triples(const IntMatrix& m);

enum class Coefficients { rational, integer };

struct HomologyResult {
  Coefficients coefficients = Coefficients::rational;
  std::vector<int> chain_ranks;               // dim C_k
  std::vector<int> boundary_ranks;            // rank d_k, index 0 and 8 are zero
  std::vector<Count> betti;                   // free rank of H_k
  std::vector<std::vector<BigInt>> torsion;   // invariant factors > 1 of H_k; empty for rational

  BettiSequence betti_sequence() const { return BettiSequence(betti); }
};

HomologyResult homology(const ChainComplexZ& complex, Coefficients coefficients = Coefficients::rational);

/// Dimensions of the subspaces of Lambda^k(R^4) fixed by the twist, k = 0..4.
HorizontalBettiSequence invariant_cohomology_oracle(const TwistMap& twist = TwistMap::right_multiplication_by_i());

struct CrossCheckResult {
  BettiSequence from_homology{{}};
  BettiSequence from_oracle{{}};
  std::optional<int> first_difference;  // lowest degree where the two differ
  bool not_torus = false;               // b_2 != 21, the coefficient of t^2 in (1+t)^7
  bool not_k3_product = false;          // b_2 != 25, the coefficient in (1+22t^2+t^4)(1+t)^3
  bool passed() const { return !first_difference && not_torus && not_k3_product; }
};

CrossCheckResult cross_check(const HomologyResult& homology, const HorizontalBettiSequence& oracle);

}  // namespace cosym
