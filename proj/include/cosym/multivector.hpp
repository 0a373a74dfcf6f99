#pragma once

// Exterior algebra on an orthonormal coframe with exact coefficients.

#include "cosym/blade.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cosym {

struct FormBasis {};    // components on coframe blades (k-forms)
struct VectorBasis {};  // components on frame blades (k-vectors)

/// Sparse combination of blades. Zero coefficients are never stored.
template <typename Scalar, typename Basis = FormBasis>
class BasicMultivector {
 public:
  using Terms = std::map<Blade, Scalar>;

  BasicMultivector() = default;

  static BasicMultivector scalar(const Scalar& c) { return blade(Blade{}, c); }
  static BasicMultivector blade(Blade b, const Scalar& c = Scalar(1)) {
    BasicMultivector out;
    out.add(b, c);
    return out;
  }
  static BasicMultivector basis(int index, const Scalar& c = Scalar(1)) {
    return blade(Blade::single(index), c);
  }

  void add(Blade b, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Degree of a nonzero homogeneous element; nullopt for zero or mixed degree.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != d) return std::nullopt;
    return d;
  }

  bool is_homogeneous_of(int k) const {
    return terms_.empty() || degree() == std::optional<int>(k);
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  BasicMultivector& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator-(BasicMultivector a) { return a *= Scalar(-1); }
  friend BasicMultivector operator*(const Scalar& s, BasicMultivector a) { return a *= s; }
  friend BasicMultivector operator*(BasicMultivector a, const Scalar& s) { return a *= s; }
  friend bool operator==(const BasicMultivector&, const BasicMultivector&) = default;

 private:
  Terms terms_;
};

template <typename Scalar>
using Multivector = BasicMultivector<Scalar, FormBasis>;
template <typename Scalar>
using KVector = BasicMultivector<Scalar, VectorBasis>;

template <typename Scalar, typename Basis>
BasicMultivector<Scalar, Basis> wedge(const BasicMultivector<Scalar, Basis>& a,
                                      const BasicMultivector<Scalar, Basis>& b) {
  BasicMultivector<Scalar, Basis> out;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      out.add(ba | bb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

/// k-fold wedge power; power(w, 0) is the scalar 1.
template <typename Scalar, typename Basis>
BasicMultivector<Scalar, Basis> wedge_power(const BasicMultivector<Scalar, Basis>& a, int k) {
  auto out = BasicMultivector<Scalar, Basis>::scalar(Scalar(1));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

/// Contraction by the dual frame vector of coframe element `index`.
template <typename Scalar>
Multivector<Scalar> interior(int index, const Multivector<Scalar>& w) {
  Multivector<Scalar> out;
  for (const auto& [b, c] : w.terms()) {
    const int s = interior_sign(index, b);
    if (s == 0) continue;
    out.add(Blade::from_mask(b.mask() & ~(std::uint32_t{1} << index)), s > 0 ? c : -c);
  }
  return out;
}

/// Contraction by a vector (a degree-one KVector); linear in the vector.
template <typename Scalar>
Multivector<Scalar> interior(const KVector<Scalar>& v, const Multivector<Scalar>& w) {
  if (!v.is_homogeneous_of(1)) throw std::invalid_argument("interior: argument is not a vector");
  Multivector<Scalar> out;
  for (const auto& [b, c] : v.terms()) {
    out += c * interior(b.indices().front(), w);
  }
  return out;
}

/// Hodge star for the orientation e_0 ^ ... ^ e_{D-1}: *e_I = sign(I, I^c) e_{I^c},
/// so that e_I ^ *e_I is the volume form.
template <typename Scalar>
Multivector<Scalar> hodge_star(const Multivector<Scalar>& w, ModelDims dims) {
  if (!w.is_zero() && !w.degree()) {
    throw std::invalid_argument("hodge_star: input is not homogeneous");
  }
  const std::uint32_t all = dims.all_mask();
  Multivector<Scalar> out;
  for (const auto& [b, c] : w.terms()) {
    const Blade complement = Blade::from_mask(all & ~b.mask());
    out.add(complement, wedge_sign(b, complement) > 0 ? c : -c);
  }
  return out;
}

namespace detail {
template <typename Scalar>
Scalar inverse_factorial(int k) {
  Scalar f(1);
  for (int i = 2; i <= k; ++i) f *= Scalar(i);
  return Scalar(1) / f;
}
}  // namespace detail

/// Natural pairing of a k-form with a k-vector, normalized so that
/// <r1^...^rk, V1^...^Vk> = det[r_i(V_j)] / k!.
template <typename Scalar>
Scalar pairing(const Multivector<Scalar>& w, const KVector<Scalar>& v) {
  const auto dw = w.degree();
  const auto dv = v.degree();
  if ((dw && dv && *dw != *dv) || (!w.is_zero() && !dw) || (!v.is_zero() && !dv)) {
    throw std::invalid_argument("pairing: degree mismatch");
  }
  if (w.is_zero() || v.is_zero()) return Scalar(0);
  Scalar sum(0);
  for (const auto& [b, c] : w.terms()) {
    auto it = v.terms().find(b);
    if (it != v.terms().end()) sum += c * it->second;
  }
  return sum * detail::inverse_factorial<Scalar>(*dw);
}

/// First blade in lexicographic coframe order carrying a nonzero coefficient.
template <typename Scalar, typename Basis>
std::optional<Blade> leading_blade(const BasicMultivector<Scalar, Basis>& w) {
  if (w.is_zero()) return std::nullopt;
  return w.terms().begin()->first;
}

}  // namespace cosym
