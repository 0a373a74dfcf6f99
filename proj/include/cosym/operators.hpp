#pragma once

// The operators l, lambda, e, L, Lambda, K, K_{a,s}, I and H of the flat model, as
// graded matrices. Operators named *_full act on the whole exterior algebra; the
// others act on the eta-free sector, which models the 000 component of harmonic forms.

#include "cosym/contact_model.hpp"
#include "cosym/graded_operator.hpp"

#include <array>
#include <vector>

namespace cosym {

template <typename Scalar>
using Operator = GradedOperator<Scalar>;
using SpacePtr = std::shared_ptr<const BladeSpace>;

/// Eta-free blades of degree k, in lexicographic order.
inline std::vector<Blade> sector_000(ModelDims dims, int k) {
  if (k < 0 || k > 4 * dims.n) throw std::out_of_range("sector_000: degree out of range");
  const auto space = BladeSpace::horizontal(dims);
  const auto basis = space->basis(k);
  return {basis.begin(), basis.end()};
}

/// The eta-free part of the sector with fixed eta pattern: blades containing eta_a
/// exactly when bit (a-1) of `pattern` is set.
inline std::vector<Blade> eta_sector(ModelDims dims, unsigned pattern, int k) {
  std::vector<Blade> out;
  const auto space = BladeSpace::full(dims);
  for (Blade b : space->basis(k)) {
    if (((b.mask() >> (4 * dims.n)) & 7u) == pattern) out.push_back(b);
  }
  return out;
}

/// l_a = eta_a ^ -.
template <typename Scalar>
Operator<Scalar> op_l(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  check_alpha(alpha);
  return wedge_operator(std::move(space), m.coframe(FrameLabel::eta(alpha)), "l" + std::to_string(alpha));
}

/// lambda_a = i_{xi_a}.
template <typename Scalar>
Operator<Scalar> op_lambda(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  check_alpha(alpha);
  return interior_operator(std::move(space), m.frame_vector(FrameLabel::eta(alpha)), "lambda" + std::to_string(alpha));
}

/// e_a = l_a lambda_a.
template <typename Scalar>
Operator<Scalar> op_e(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  return (op_l(m, space, alpha) * op_lambda(m, space, alpha)).rename("e" + std::to_string(alpha));
}

/// L_a = Xi_a ^ -.
template <typename Scalar>
Operator<Scalar> op_L(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  return wedge_operator(std::move(space), m.xi_form(alpha), "L" + std::to_string(alpha));
}

/// Lambda_a = * L_a *, on the full algebra.
template <typename Scalar>
Operator<Scalar> op_Lambda_star(const ContactModel<Scalar>& m, SpacePtr full, int alpha) {
  const auto star = hodge_operator<Scalar>(full);
  return (star * op_L(m, full, alpha) * star).rename("Lambda" + std::to_string(alpha));
}

/// Lambda_a = sum_s (i_{X_s} i_{phi_a X_s} + i_{phi_b X_s} i_{phi_c X_s}).
template <typename Scalar>
Operator<Scalar> op_Lambda(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  check_alpha(alpha);
  const int b = cyclic_next(alpha);
  const int c = cyclic_next(b);
  auto i = [&](const FrameLabel& v) { return interior_operator(space, m.frame_vector(v)); };
  Operator<Scalar> out = Operator<Scalar>::zero(space, DegreeMap::shift(-2));
  for (int s = 1; s <= m.dims().n; ++s) {
    out += i(FrameLabel::zeta(s)) * i(FrameLabel::phi_zeta(alpha, s));
    out += i(FrameLabel::phi_zeta(b, s)) * i(FrameLabel::phi_zeta(c, s));
  }
  return out.rename("Lambda" + std::to_string(alpha));
}

/// K_a = sum_s (phi*_a zeta_s ^ i_{X_s} + zeta_s ^ i_{phi_a X_s}
///              + phi*_c zeta_s ^ i_{phi_b X_s} - phi*_b zeta_s ^ i_{phi_c X_s}).
template <typename Scalar>
Operator<Scalar> op_K(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  check_alpha(alpha);
  const int b = cyclic_next(alpha);
  const int c = cyclic_next(b);
  auto w = [&](const Multivector<Scalar>& form) { return wedge_operator(space, form); };
  auto i = [&](const FrameLabel& v) { return interior_operator(space, m.frame_vector(v)); };
  Operator<Scalar> out = Operator<Scalar>::zero(space, DegreeMap::shift(0));
  for (int s = 1; s <= m.dims().n; ++s) {
    const auto zeta = m.coframe(FrameLabel::zeta(s));
    out += w(m.phi_star(alpha, zeta)) * i(FrameLabel::zeta(s));
    out += w(zeta) * i(FrameLabel::phi_zeta(alpha, s));
    out += w(m.phi_star(c, zeta)) * i(FrameLabel::phi_zeta(b, s));
    out -= w(m.phi_star(b, zeta)) * i(FrameLabel::phi_zeta(c, s));
  }
  return out.rename("K" + std::to_string(alpha));
}

/// Weighting of the terms of K_{a,s}(r1 ^ ... ^ rk), which applies phi*_a to the
/// factors at positions j1 < ... < js.
enum class KSign {
  derivation,   // every term with weight +1
  alternating,  // weight (-1)^(j1 + ... + js + s), positions counted from 1
};

/// K_{a,s} on the eta-free sector, built factor by factor; s = 0 gives the identity
/// and blocks of degree k < s vanish.
template <typename Scalar>
Operator<Scalar> op_K_s(const ContactModel<Scalar>& m, SpacePtr space, int alpha, int s,
                        KSign convention = KSign::derivation) {
  check_alpha(alpha);
  if (s < 0 || s > space->max_degree()) throw std::out_of_range("op_K_s: s out of range");
  return Operator<Scalar>::from_blade_action(
      space, DegreeMap::shift(0), "K" + std::to_string(alpha) + "," + std::to_string(s), [&](Blade blade) {
        const auto idx = blade.indices();
        const int k = static_cast<int>(idx.size());
        Multivector<Scalar> out;
        if (s > k) return out;
        for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << k); ++chosen) {
          if (std::popcount(chosen) != s) continue;
          auto term = Multivector<Scalar>::scalar(Scalar(1));
          int position_sum = 0;
          for (int j = 0; j < k; ++j) {
            const auto factor = Multivector<Scalar>::basis(idx[j]);
            if ((chosen >> j) & 1u) {
              term = wedge(term, m.phi_star(alpha, factor));
              position_sum += j + 1;
            } else {
              term = wedge(term, factor);
            }
          }
          if (convention == KSign::alternating && ((position_sum + s) & 1)) term *= Scalar(-1);
          out += term;
        }
        return out;
      });
}

/// I_a(r1 ^ ... ^ rk) = phi*_a r1 ^ ... ^ phi*_a rk.
template <typename Scalar>
Operator<Scalar> op_I(const ContactModel<Scalar>& m, SpacePtr space, int alpha) {
  check_alpha(alpha);
  return Operator<Scalar>::from_blade_action(space, DegreeMap::shift(0), "I" + std::to_string(alpha), [&](Blade blade) {
    auto out = Multivector<Scalar>::scalar(Scalar(1));
    for (int i : blade.indices()) out = wedge(out, m.phi_star(alpha, Multivector<Scalar>::basis(i)));
    return out;
  });
}

/// H = (2n - k) on degree k.
template <typename Scalar>
Operator<Scalar> op_H(ModelDims dims, SpacePtr space) {
  return Operator<Scalar>::diagonal(space, [&](int k) { return Scalar(2 * dims.n - k); }, "H");
}

/// Every operator the verification suites need, materialized once.
template <typename Scalar>
struct OperatorSet {
  ContactModel<Scalar> model;
  SpacePtr full;
  SpacePtr sector;

  Operator<Scalar> id_full;
  Operator<Scalar> id_sector;
  Operator<Scalar> hodge;
  std::array<Operator<Scalar>, 3> l, lambda, e;
  std::array<Operator<Scalar>, 3> L_full, Lambda_star_full, Lambda_contraction_full, K_full, I_full;
  std::array<Operator<Scalar>, 3> L, Lambda, K, K_blade, I;
  Operator<Scalar> H;

  static OperatorSet build(const ContactModel<Scalar>& model) {
    const ModelDims dims = model.dims();
    auto full = BladeSpace::full(dims);
    auto sector = BladeSpace::horizontal(dims);
    auto per_alpha = [](auto&& f) {
      return std::array<Operator<Scalar>, 3>{f(1), f(2), f(3)};
    };
    return OperatorSet{
        model,
        full,
        sector,
        Operator<Scalar>::identity(full),
        Operator<Scalar>::identity(sector),
        hodge_operator<Scalar>(full),
        per_alpha([&](int a) { return op_l(model, full, a); }),
        per_alpha([&](int a) { return op_lambda(model, full, a); }),
        per_alpha([&](int a) { return op_e(model, full, a); }),
        per_alpha([&](int a) { return op_L(model, full, a); }),
        per_alpha([&](int a) { return op_Lambda_star(model, full, a); }),
        per_alpha([&](int a) { return op_Lambda(model, full, a); }),
        per_alpha([&](int a) { return op_K(model, full, a); }),
        per_alpha([&](int a) { return op_I(model, full, a); }),
        per_alpha([&](int a) { return op_L(model, sector, a); }),
        per_alpha([&](int a) { return op_Lambda(model, sector, a); }),
        per_alpha([&](int a) { return op_K(model, sector, a); }),
        per_alpha([&](int a) { return op_K_s(model, sector, a, 1).rename("K" + std::to_string(a)); }),
        per_alpha([&](int a) { return op_I(model, sector, a); }),
        op_H<Scalar>(dims, sector),
    };
  }
};

}  // namespace cosym
