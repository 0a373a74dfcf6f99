#pragma once

// so(4,1) as 5x5 rational matrices A with A E1 = -E1 A^T, E1 = diag(1,1,1,1,-1),
// and its identification with the span of H, L_a, Lambda_a, K_a on eta-free forms.

#include "cosym/contact_model.hpp"
#include "cosym/identity_report.hpp"
#include "cosym/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cosym {

using Matrix5 = Eigen::Matrix<Rational, 5, 5>;

/// diag(1,1,1,1,-1).
Matrix5 signature_matrix();

bool satisfies_defining_relation(const Matrix5& a);

/// An element of so(4,1); construction rejects matrices outside the algebra.
class LieElement {
 public:
  explicit LieElement(const Matrix5& m);
  static LieElement zero();

  const Matrix5& matrix() const { return m_; }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.m_ == b.m_; }

 private:
  Matrix5 m_;
};

/// t_ij = e_i5 + e_5i if j = 5, e_ij - e_ji otherwise (1-based). For i > j both
/// at most 4, t_ij = -t_ji. Throws std::out_of_range otherwise.
LieElement basis_t(int i, int j);

/// The 10 elements t_ij, i < j, in lexicographic order of (i, j).
std::vector<LieElement> t_basis();

/// Matrix commutator AB - BA.
LieElement bracket(const LieElement& a, const LieElement& b);

enum class Generator { H, L1, L2, L3, Lambda1, Lambda2, Lambda3, K1, K2, K3 };

inline constexpr std::array<Generator, 10> kGenerators = {
    Generator::H,       Generator::L1,      Generator::L2, Generator::L3, Generator::Lambda1,
    Generator::Lambda2, Generator::Lambda3, Generator::K1, Generator::K2, Generator::K3,
};

Generator L_generator(int alpha);
Generator Lambda_generator(int alpha);
Generator K_generator(int alpha);

std::string_view generator_name(Generator g);
std::optional<Generator> parse_generator(std::string_view name);
inline int generator_index(Generator g) { return static_cast<int>(g); }

/// H -> 2 t_45, L_a -> t_a5 + t_a4, Lambda_a -> t_a5 - t_a4, K_a -> 2 t_bc.
LieElement iso_map(Generator g);
/// Throws std::invalid_argument for an unknown name.
LieElement iso_map(std::string_view name);

/// Coefficients over kGenerators.
using Combination = std::array<Rational, 10>;

/// [x, y] expanded by the operator bracket relations:
///   [L_a, Lambda_a] = -H, [L_a, Lambda_b] = K_c, [L_a, Lambda_c] = -K_b,
///   [L_a, H] = 2 L_a, [Lambda_a, H] = -2 Lambda_a, [K_a, H] = 0,
///   [L_a, L_b] = [Lambda_a, Lambda_b] = 0, [K_a, L_a] = [K_a, Lambda_a] = 0,
///   [K_a, L_b] = -2 L_c, [K_a, L_c] = 2 L_b, [K_a, Lambda_b] = -2 Lambda_c,
///   [K_a, Lambda_c] = 2 Lambda_b, [K_a, K_b] = -2 K_c.
Combination operator_bracket_table(Generator x, Generator y);

LieElement evaluate(const Combination& c);

/// One of the bracket relations among the t_ij, with its verdict.
struct TableEntry {
  std::string relation;  // e.g. "[t12,t13] = -t23"
  bool passed = false;
};

/// All relations [t_ij, t_ik] = -t_jk, [t_ij, t_jk] = t_ik, [t_ik, t_jk] = -t_ij
/// (i<j<k<5) and [t_ij, t_i5] = -t_j5, [t_ij, t_j5] = t_i5, [t_i5, t_j5] = t_ij (i<j<5).
std::vector<TableEntry> check_t_bracket_table();

struct PairCheck {
  Generator x{};
  Generator y{};
  Combination operator_side{};  // [x, y] of the materialized operators, in the span basis
  bool in_span = false;
  bool matches_table = false;     // operator_side equals operator_bracket_table(x, y)
  bool homomorphism = false;      // bracket(iso x, iso y) = iso applied to operator_side
  bool passed() const { return in_span && matches_table && homomorphism; }
};

struct ModuleOptions {
  /// Negative-control hook: replaces the operator of this generator by its negative.
  std::optional<Generator> negated;
};

struct ModuleReport {
  int n = 0;
  int span_rank = 0;   // rank of the 10 operators on eta-free forms
  int image_rank = 0;  // rank of the 10 iso_map images
  std::vector<PairCheck> pairs;  // the 45 pairs x < y in kGenerators order
  bool passed = false;

  /// First failing pair, if any.
  const PairCheck* first_failure() const;
  IdentityReport summary() const;
};

ModuleReport verify_module(const ContactModel<Rational>& model, const ModuleOptions& options = {});
ModuleReport verify_module(int n, const ModuleOptions& options = {});

/// Rank of the 10 images as 25-vectors.
int iso_image_rank();

}  // namespace cosym
