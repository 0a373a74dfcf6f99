#pragma once

// Reference flat model. phi*_a on each horizontal block (zeta_s, phi*_1 zeta_s,
// phi*_2 zeta_s, phi*_3 zeta_s) is right multiplication by the unit i, j, k on the
// quaternions with basis (1, i, j, k), computed from Hamilton's rules. On the eta
// block phi*_a eta_e = sum_g eps(e, a, g) eta_g with eps from a permutation sign.

#include "exterior_oracle.hpp"

#include <array>

namespace oracle {

using Quaternion = std::array<long long, 4>;  // 1, i, j, k components

inline Quaternion hamilton(const Quaternion& p, const Quaternion& q) {
  // i^2 = j^2 = k^2 = ijk = -1
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

inline Quaternion unit(int u) {
  Quaternion q{0, 0, 0, 0};
  q[u] = 1;
  return q;
}

inline int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return sort_sign({a, b, c});
}

using Vec = std::map<int, Frac>;

struct Model {
  int n;
  int D;
  // phi_star[a][i]: image of coframe element i under phi*_a, as index -> component
  std::array<std::vector<Vec>, 4> phi_star;

  explicit Model(int rank) : n(rank), D(4 * rank + 3) {
    for (int a = 1; a <= 3; ++a) {
      phi_star[a].assign(D, {});
      for (int s = 0; s < n; ++s) {
        for (int u = 0; u < 4; ++u) {
          const Quaternion image = hamilton(unit(u), unit(a));
          for (int v = 0; v < 4; ++v) {
            if (image[v] != 0) phi_star[a][u * n + s][v * n + s] = Frac(image[v]);
          }
        }
      }
      for (int e = 1; e <= 3; ++e) {
        for (int g = 1; g <= 3; ++g) {
          if (const int sign = epsilon(e, a, g)) phi_star[a][eta(e)][eta(g)] = Frac(sign);
        }
      }
    }
  }

  int zeta(int s) const { return s - 1; }
  int phi_zeta(int a, int s) const { return a * n + s - 1; }
  int eta(int a) const { return 4 * n + a - 1; }

  Form phi_star_form(int a, const Form& one_form) const {
    Form out;
    for (const auto& [idx, c] : one_form) {
      for (const auto& [t, v] : phi_star[a][idx.at(0)]) add(out, {t}, c * v);
    }
    return out;
  }

  /// phi_a on vectors: the transpose of phi*_a.
  Vec phi(int a, const Vec& v) const {
    Vec out;
    for (int from = 0; from < D; ++from) {
      Frac total = 0;
      for (const auto& [to, c] : phi_star[a][from]) {
        auto it = v.find(to);
        if (it != v.end()) total += c * it->second;
      }
      if (total.numerator() != 0) out[from] = total;
    }
    return out;
  }

  Vec X(int s) const { return {{zeta(s), Frac(1)}}; }
  Vec phiX(int a, int s) const { return phi(a, X(s)); }
  Vec xi(int a) const { return {{eta(a), Frac(1)}}; }

  Form Xi(int a) const {
    const int b = a % 3 + 1;
    const int c = b % 3 + 1;
    Form out;
    for (int s = 1; s <= n; ++s) {
      const Form z = basis(zeta(s));
      out = plus(out, wedge(z, phi_star_form(a, z)));
      out = plus(out, scaled(wedge(phi_star_form(b, z), phi_star_form(c, z)), -1));
    }
    return out;
  }

  Form Phi(int a) const {
    const int b = a % 3 + 1;
    const int c = b % 3 + 1;
    return plus(scaled(Xi(a), 2), scaled(wedge(basis(eta(b)), basis(eta(c))), -2));
  }

  Indices horizontal_pool() const {
    Indices p(4 * n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
  Indices full_pool() const {
    Indices p(D);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  // --- operators on forms ---

  Form L(int a, const Form& w) const { return wedge(Xi(a), w); }

  Form Lambda(int a, const Form& w) const {
    const int b = a % 3 + 1;
    const int c = b % 3 + 1;
    Form out;
    for (int s = 1; s <= n; ++s) {
      out = plus(out, interior(X(s), interior(phiX(a, s), w)));
      out = plus(out, interior(phiX(b, s), interior(phiX(c, s), w)));
    }
    return out;
  }

  /// Applies phi*_a to one factor at a time and sums.
  Form K(int a, const Form& w) const {
    Form out;
    for (const auto& [idx, c] : w) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Form term = Form{{Indices{}, c}};
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const Form factor = basis(idx[i]);
          term = wedge(term, i == j ? phi_star_form(a, factor) : factor);
        }
        out = plus(out, term);
      }
    }
    return out;
  }

  Form I(int a, const Form& w) const {
    Form out;
    for (const auto& [idx, c] : w) {
      Form term = Form{{Indices{}, c}};
      for (int i : idx) term = wedge(term, phi_star_form(a, basis(i)));
      out = plus(out, term);
    }
    return out;
  }

  Form H(const Form& w) const {
    Form out;
    for (const auto& [idx, c] : w) add(out, idx, c * Frac(2 * n - static_cast<long long>(idx.size())));
    return out;
  }
};

/// Integer matrix of a degree-preserving-or-shifting operator from degree k blades of
/// `pool` to degree k + shift blades; throws if an entry is not an integer.
template <typename F>
std::vector<std::vector<long long>> block(const Indices& pool, int k, int shift, F&& op) {
  const auto source = subsets(pool, k);
  const auto target = subsets(pool, k + shift);
  std::vector<std::vector<long long>> m(target.size(), std::vector<long long>(source.size(), 0));
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Form image = op(Form{{source[col], Frac(1)}});
    for (const auto& [idx, c] : image) {
      const auto row = std::lower_bound(target.begin(), target.end(), idx) - target.begin();
      if (row == static_cast<long>(target.size()) || target[row] != idx) throw std::logic_error("image leaves pool");
      if (c.denominator() != 1) throw std::logic_error("non-integral operator entry");
      m[row][col] = c.numerator();
    }
  }
  return m;
}

using IntMat = std::vector<std::vector<long long>>;

inline IntMat multiply(const IntMat& a, const IntMat& b, std::size_t inner) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMat out(rows, std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < inner; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

}  // namespace oracle
