#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosym {

/// Size of the model: quaternionic rank n and coframe size 4n+3.
///
/// Coframe indices are laid out in blocks:
///   [0, n)        zeta_s
///   [n, 2n)       phi*_1 zeta_s
///   [2n, 3n)      phi*_2 zeta_s
///   [3n, 4n)      phi*_3 zeta_s
///   4n, 4n+1, 4n+2  eta_1, eta_2, eta_3
/// so that index order is the lexicographic coframe order used for leading blades.
struct ModelDims {
  int n = 1;

  static constexpr int kMaxRank = 7;  // blades are 32-bit masks

  static ModelDims make(int rank) {
    if (rank < 0 || rank > kMaxRank) {
      throw std::invalid_argument("quaternionic rank out of range: " + std::to_string(rank));
    }
    return ModelDims{rank};
  }

  constexpr int dim() const { return 4 * n + 3; }
  constexpr int horizontal_dim() const { return 4 * n; }
  constexpr int eta_index(int alpha) const { return 4 * n + alpha - 1; }
  constexpr std::uint32_t all_mask() const { return (std::uint32_t{1} << dim()) - 1u; }
  constexpr std::uint32_t horizontal_mask() const { return (std::uint32_t{1} << (4 * n)) - 1u; }

  friend constexpr bool operator==(ModelDims, ModelDims) = default;
};

/// A basis monomial e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik, stored as a bit mask.
class Blade {
 public:
  constexpr Blade() = default;

  static constexpr Blade from_mask(std::uint32_t mask) { return Blade(mask); }

  static Blade from_indices(std::span<const int> indices) {
    std::uint32_t mask = 0;
    int previous = -1;
    for (int i : indices) {
      if (i <= previous || i >= 32) {
        throw std::invalid_argument("blade indices must be strictly increasing and < 32");
      }
      mask |= std::uint32_t{1} << i;
      previous = i;
    }
    return Blade(mask);
  }
  static Blade from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static constexpr Blade single(int index) { return Blade(std::uint32_t{1} << index); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int index) const { return (mask_ >> index) & 1u; }
  constexpr bool is_scalar() const { return mask_ == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(degree());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(Blade, Blade) = default;

  /// Graded lexicographic order: lower degree first, then lexicographic comparison of
  /// the increasing index lists.
  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    // Below the lowest differing index both lists agree; the list holding that index is smaller.
    const std::uint32_t lowest = diff & (~diff + 1u);
    return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Sign of e_a ^ e_b relative to the ascending blade a|b; zero when they share an index.
constexpr int wedge_sign(Blade a, Blade b) {
  if (a.mask() & b.mask()) return 0;
  int swaps = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    swaps += std::popcount(a.mask() >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign picked up by contracting the dual vector of `index` into `blade`
/// (the antiderivation moves past every smaller index); zero if absent.
constexpr int interior_sign(int index, Blade blade) {
  if (!blade.contains(index)) return 0;
  const int before = std::popcount(blade.mask() & ((std::uint32_t{1} << index) - 1u));
  return (before & 1) ? -1 : 1;
}

constexpr Blade operator|(Blade a, Blade b) { return Blade::from_mask(a.mask() | b.mask()); }

}  // namespace cosym
