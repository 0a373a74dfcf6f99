#pragma once

// Flat local model of a 3-cosymplectic structure on an orthonormal coframe
//   zeta_s, phi*_a zeta_s (a = 1,2,3, s = 1..n), eta_1, eta_2, eta_3.

#include "cosym/multivector.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosym {

/// Successor of alpha in the cyclic order (1,2,3).
constexpr int cyclic_next(int alpha) { return alpha % 3 + 1; }

/// Totally antisymmetric symbol with eps(1,2,3) = +1.
constexpr int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return (b == cyclic_next(a) && c == cyclic_next(b)) ? 1 : -1;
}

inline void check_alpha(int alpha) {
  if (alpha < 1 || alpha > 3) throw std::out_of_range("structure index must be 1, 2 or 3");
}

struct FrameLabel {
  enum class Kind { zeta, phi_zeta, eta };

  Kind kind = Kind::zeta;
  int alpha = 0;  // 1..3 for phi_zeta and eta
  int s = 0;      // 1..n for zeta and phi_zeta

  static FrameLabel zeta(int s) { return {Kind::zeta, 0, s}; }
  static FrameLabel phi_zeta(int alpha, int s) { return {Kind::phi_zeta, alpha, s}; }
  static FrameLabel eta(int alpha) { return {Kind::eta, alpha, 0}; }

  int index(ModelDims dims) const {
    switch (kind) {
      case Kind::zeta:
        if (s < 1 || s > dims.n) break;
        return s - 1;
      case Kind::phi_zeta:
        if (s < 1 || s > dims.n || alpha < 1 || alpha > 3) break;
        return alpha * dims.n + s - 1;
      case Kind::eta:
        if (alpha < 1 || alpha > 3) break;
        return dims.eta_index(alpha);
    }
    throw std::out_of_range("frame label outside the model");
  }

  static FrameLabel from_index(ModelDims dims, int index) {
    if (index < 0 || index >= dims.dim()) throw std::out_of_range("coframe index outside the model");
    if (index >= 4 * dims.n) return eta(index - 4 * dims.n + 1);
    const int block = index / dims.n;
    const int s = index % dims.n + 1;
    return block == 0 ? zeta(s) : phi_zeta(block, s);
  }

  std::string name() const {
    switch (kind) {
      case Kind::zeta: return "zeta" + std::to_string(s);
      case Kind::phi_zeta: return "phi" + std::to_string(alpha) + "*zeta" + std::to_string(s);
      case Kind::eta: return "eta" + std::to_string(alpha);
    }
    return {};
  }

  friend bool operator==(const FrameLabel&, const FrameLabel&) = default;
};

/// phi*_alpha acting on coframe elements: each element goes to +-(one element) or to 0.
class PhiStarTable {
 public:
  struct Entry {
    int target = -1;  // coframe index, -1 when killed
    int sign = 0;     // +1, -1, or 0 when killed
  };

  /// The table of the 3-cosymplectic structure, with eps(1,2,3) = +1:
  ///   phi*_a zeta_s = phi*_a zeta_s,   phi*_a phi*_a zeta_s = -zeta_s,
  ///   phi*_a phi*_b = -phi*_c,  phi*_b phi*_a = phi*_c   for cyclic (a,b,c),
  ///   phi*_b eta_a = sum_c eps(a,b,c) eta_c.
  static PhiStarTable standard(ModelDims dims) {
    PhiStarTable t(dims);
    for (int a = 1; a <= 3; ++a) {
      const int b = cyclic_next(a);
      const int c = cyclic_next(b);
      for (int s = 1; s <= dims.n; ++s) {
        const int zeta = FrameLabel::zeta(s).index(dims);
        t.set(a, zeta, FrameLabel::phi_zeta(a, s).index(dims), 1);
        t.set(a, FrameLabel::phi_zeta(a, s).index(dims), zeta, -1);
        t.set(a, FrameLabel::phi_zeta(b, s).index(dims), FrameLabel::phi_zeta(c, s).index(dims), -1);
        t.set(a, FrameLabel::phi_zeta(c, s).index(dims), FrameLabel::phi_zeta(b, s).index(dims), 1);
      }
      for (int e = 1; e <= 3; ++e) {
        for (int g = 1; g <= 3; ++g) {
          const int sign = levi_civita(e, a, g);
          if (sign != 0) t.set(a, dims.eta_index(e), dims.eta_index(g), sign);
        }
      }
    }
    return t;
  }

  ModelDims dims() const { return dims_; }

  const Entry& at(int alpha, int index) const {
    check_alpha(alpha);
    return entries_.at(alpha - 1).at(index);
  }

  /// Negative-control hook: flips the sign of one entry.
  PhiStarTable with_sign_flip(int alpha, int index) const {
    PhiStarTable out = *this;
    check_alpha(alpha);
    out.entries_.at(alpha - 1).at(index).sign *= -1;
    return out;
  }

 private:
  explicit PhiStarTable(ModelDims dims)
      : dims_(dims), entries_{std::vector<Entry>(dims.dim()), std::vector<Entry>(dims.dim()),
                              std::vector<Entry>(dims.dim())} {}

  void set(int alpha, int from, int to, int sign) { entries_[alpha - 1][from] = Entry{to, sign}; }

  ModelDims dims_;
  std::array<std::vector<Entry>, 3> entries_;
};

template <typename Scalar>
class ContactModel {
 public:
  explicit ContactModel(ModelDims dims) : table_(PhiStarTable::standard(dims)) {}
  explicit ContactModel(PhiStarTable table) : table_(std::move(table)) {}

  ModelDims dims() const { return table_.dims(); }
  const PhiStarTable& table() const { return table_; }

  Multivector<Scalar> coframe(const FrameLabel& label) const {
    return Multivector<Scalar>::basis(label.index(dims()));
  }

  /// phi*_alpha on one-forms (pullback by phi_alpha).
  Multivector<Scalar> phi_star(int alpha, const Multivector<Scalar>& w) const {
    if (!w.is_homogeneous_of(1)) throw std::invalid_argument("phi_star: argument is not a one-form");
    Multivector<Scalar> out;
    for (const auto& [b, c] : w.terms()) {
      const auto& e = table_.at(alpha, b.indices().front());
      if (e.sign != 0) out.add(Blade::single(e.target), e.sign > 0 ? c : -c);
    }
    return out;
  }

  /// phi_alpha on vectors, the transpose of phi*_alpha: c(phi V) = (phi* c)(V).
  KVector<Scalar> phi(int alpha, const KVector<Scalar>& v) const {
    if (!v.is_homogeneous_of(1)) throw std::invalid_argument("phi: argument is not a vector");
    KVector<Scalar> out;
    for (int from = 0; from < dims().dim(); ++from) {
      const auto& e = table_.at(alpha, from);
      if (e.sign == 0) continue;
      const Scalar c = v.coefficient(Blade::single(e.target));
      if (c != Scalar(0)) out.add(Blade::single(from), e.sign > 0 ? c : -c);
    }
    return out;
  }

  /// Frame vectors X_s, phi_a X_s, xi_a. phi_a X_s is the image of X_s, which is
  /// minus the dual vector of phi*_a zeta_s.
  KVector<Scalar> frame_vector(const FrameLabel& label) const {
    switch (label.kind) {
      case FrameLabel::Kind::zeta:
      case FrameLabel::Kind::eta:
        return KVector<Scalar>::basis(label.index(dims()));
      case FrameLabel::Kind::phi_zeta:
        return phi(label.alpha, KVector<Scalar>::basis(FrameLabel::zeta(label.s).index(dims())));
    }
    return {};
  }

  /// The fundamental two-form
  ///   Phi_a = 2 sum_s (zeta_s ^ phi*_a zeta_s - phi*_b zeta_s ^ phi*_c zeta_s) - 2 eta_b ^ eta_c.
  Multivector<Scalar> fundamental_form(int alpha) const {
    check_alpha(alpha);
    const int b = cyclic_next(alpha);
    const int c = cyclic_next(b);
    Multivector<Scalar> out = Scalar(2) * horizontal_sum(alpha);
    out -= Scalar(2) * wedge(coframe(FrameLabel::eta(b)), coframe(FrameLabel::eta(c)));
    return out;
  }

  /// Xi_a = sum_s (zeta_s ^ phi*_a zeta_s - phi*_b zeta_s ^ phi*_c zeta_s).
  Multivector<Scalar> xi_form(int alpha) const {
    check_alpha(alpha);
    return horizontal_sum(alpha);
  }

  /// Xi_a = (Phi_a + 2 eta_b ^ eta_c) / 2.
  Multivector<Scalar> xi_form_from_fundamental(int alpha) const {
    const int b = cyclic_next(alpha);
    const int c = cyclic_next(b);
    Multivector<Scalar> out = fundamental_form(alpha);
    out += Scalar(2) * wedge(coframe(FrameLabel::eta(b)), coframe(FrameLabel::eta(c)));
    return out * (Scalar(1) / Scalar(2));
  }

 private:
  Multivector<Scalar> horizontal_sum(int alpha) const {
    const int b = cyclic_next(alpha);
    const int c = cyclic_next(b);
    Multivector<Scalar> out;
    for (int s = 1; s <= dims().n; ++s) {
      const auto zeta = coframe(FrameLabel::zeta(s));
      out += wedge(zeta, phi_star(alpha, zeta));
      out -= wedge(phi_star(b, zeta), phi_star(c, zeta));
    }
    return out;
  }

  PhiStarTable table_;
};

}  // namespace cosym
