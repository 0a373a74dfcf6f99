#include "cosym/verify_identities.hpp"

#include "cosym/operators.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace cosym {
namespace {

using Q = Rational;
using Op = Operator<Q>;
using Set = OperatorSet<Q>;

std::string instance_label(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [key, value] : parts) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

/// Accumulates the checks of one identity family; the first failure is kept.
class Family {
 public:
  Family(std::string name, std::string statement, int max_degree) {
    report_.name = std::move(name);
    report_.statement = std::move(statement);
    report_.max_degree = max_degree;
    report_.passed = true;
  }

  bool ok() const { return report_.passed; }

  void expect(const std::string& instance, std::optional<Witness> witness, std::string detail = {}) {
    if (!report_.passed || !witness) return;
    report_.passed = false;
    report_.instance = instance;
    report_.witness = std::move(witness);
    report_.detail = std::move(detail);
  }

  void expect_equal(const std::string& instance, const Op& lhs, const Op& rhs) {
    if (!report_.passed) return;
    expect(instance, lhs.first_difference(rhs), "lhs - rhs is nonzero");
  }

  template <typename Pred>
  void expect_equal_where(const std::string& instance, const Op& lhs, const Op& rhs, Pred&& keep) {
    if (!report_.passed) return;
    expect(instance, lhs.first_difference_where(rhs, keep), "lhs - rhs is nonzero");
  }

  void expect_zero(const std::string& instance, const Op& op) {
    expect_equal(instance, op, Op::zero(op.space_ptr(), op.degree_map()));
  }

  IdentityReport finish() { return std::move(report_); }

 private:
  IdentityReport report_;
};

/// First blade in `blades` not fixed by op, with the offending coefficient.
std::optional<Witness> fixed_point_failure(const Op& op, const std::vector<Blade>& blades) {
  for (Blade b : blades) {
    auto image = op.apply(Multivector<Q>::blade(b));
    image -= Multivector<Q>::blade(b);
    if (image.is_zero()) continue;
    const auto& [target, value] = *image.terms().begin();
    std::ostringstream v;
    v << value;
    return Witness{b.degree(), b, target, v.str()};
  }
  return std::nullopt;
}

int index_of(int alpha) { return alpha - 1; }

// --- eta operators ---------------------------------------------------------

IdentityReport lambda_l(const Set& ops) {
  Family f("anticommutator.lambda_l", "{lambda_a, l_b} = delta_ab id", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Op expected = a == b ? ops.id_full : Op::zero(ops.full, DegreeMap::shift(0));
      f.expect_equal(instance_label({{"a", a}, {"b", b}}),
                     anticommutator(ops.lambda[index_of(a)], ops.l[index_of(b)]), expected);
    }
  }
  return f.finish();
}

IdentityReport lambda_lambda(const Set& ops) {
  Family f("anticommutator.lambda_lambda", "{lambda_a, lambda_b} = 0", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      f.expect_zero(instance_label({{"a", a}, {"b", b}}),
                    anticommutator(ops.lambda[index_of(a)], ops.lambda[index_of(b)]));
    }
  }
  return f.finish();
}

IdentityReport l_l(const Set& ops) {
  Family f("anticommutator.l_l", "{l_a, l_b} = 0", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      f.expect_zero(instance_label({{"a", a}, {"b", b}}), anticommutator(ops.l[index_of(a)], ops.l[index_of(b)]));
    }
  }
  return f.finish();
}

IdentityReport idempotent_square(const Set& ops) {
  Family f("idempotents.square", "e_a^2 = e_a", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    f.expect_equal(instance_label({{"a", a}}), ops.e[index_of(a)] * ops.e[index_of(a)], ops.e[index_of(a)]);
  }
  return f.finish();
}

IdentityReport idempotent_commute(const Set& ops) {
  Family f("idempotents.commute", "[e_a, e_b] = 0", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      f.expect_zero(instance_label({{"a", a}, {"b", b}}), commutator(ops.e[index_of(a)], ops.e[index_of(b)]));
    }
  }
  return f.finish();
}

IdentityReport cube_isomorphisms(const Set& ops) {
  Family f("cube.inverse_isomorphisms",
           "l_a lambda_a = id on eta sectors containing eta_a, lambda_a l_a = id on the others",
           ops.full->max_degree());
  const ModelDims dims = ops.model.dims();
  for (int a = 1; a <= 3; ++a) {
    const Op down_up = ops.l[index_of(a)] * ops.lambda[index_of(a)];
    const Op up_down = ops.lambda[index_of(a)] * ops.l[index_of(a)];
    for (unsigned pattern = 0; pattern < 8; ++pattern) {
      const bool has_a = (pattern >> (a - 1)) & 1u;
      for (int k = 0; k <= ops.full->max_degree() && f.ok(); ++k) {
        const auto blades = eta_sector(dims, pattern, k);
        f.expect(instance_label({{"a", a}, {"sector", static_cast<int>(pattern)}}),
                 fixed_point_failure(has_a ? down_up : up_down, blades), "blade not fixed");
      }
    }
  }
  return f.finish();
}

// --- Hodge star --------------------------------------------------------------

IdentityReport hodge_involution(const Set& ops) {
  Family f("hodge.involution", "** = id", ops.full->max_degree());
  f.expect_equal("", ops.hodge * ops.hodge, ops.id_full);
  return f.finish();
}

IdentityReport hodge_contraction(const Set& ops) {
  const int D = ops.model.dims().dim();
  Family f("hodge.contraction", "*(r ^ *w) = (-1)^((D-k)(k-1)) i_Y w for coframe r with dual Y", D);
  const Op sign = Op::diagonal(ops.full, [D](int k) { return ((D - k) * (k - 1)) % 2 == 0 ? Q(1) : Q(-1); });
  for (int i = 0; i < D && f.ok(); ++i) {
    const Op lhs = ops.hodge * wedge_operator(ops.full, Multivector<Q>::basis(i)) * ops.hodge;
    const Op rhs = interior_operator(ops.full, KVector<Q>::basis(i)) * sign;
    f.expect_equal(FrameLabel::from_index(ops.model.dims(), i).name(), lhs, rhs);
  }
  return f.finish();
}

// --- L, Lambda on the full algebra -------------------------------------------

IdentityReport lambda_star_vs_contraction(const Set& ops) {
  Family f("lambda.star_vs_contraction",
           "*L_a* = sum_s (i_{X_s} i_{phi_a X_s} + i_{phi_b X_s} i_{phi_c X_s})", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    f.expect_equal(instance_label({{"a", a}}), ops.Lambda_star_full[index_of(a)],
                   ops.Lambda_contraction_full[index_of(a)]);
  }
  return f.finish();
}

IdentityReport horizontal_commute_e(const Set& ops) {
  Family f("horizontal.commute_e", "[L_a, e_m] = [Lambda_a, e_m] = 0", ops.full->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int m = 1; m <= 3; ++m) {
      const std::string inst = instance_label({{"a", a}, {"m", m}});
      f.expect_zero("L " + inst, commutator(ops.L_full[index_of(a)], ops.e[index_of(m)]));
      f.expect_zero("Lambda " + inst, commutator(ops.Lambda_star_full[index_of(a)], ops.e[index_of(m)]));
    }
  }
  return f.finish();
}

IdentityReport sector_preserved(const Set& ops) {
  Family f("horizontal.sector_preserved", "L_a, Lambda_a, K_a, I_a map eta-free forms to eta-free forms",
           ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    const std::string inst = instance_label({{"a", a}});
    f.expect("L " + inst, ops.L_full[index_of(a)].leak_witness(*ops.sector), "image leaves the sector");
    f.expect("Lambda " + inst, ops.Lambda_star_full[index_of(a)].leak_witness(*ops.sector),
             "image leaves the sector");
    f.expect("K " + inst, ops.K_full[index_of(a)].leak_witness(*ops.sector), "image leaves the sector");
    f.expect("I " + inst, ops.I_full[index_of(a)].leak_witness(*ops.sector), "image leaves the sector");
  }
  return f.finish();
}

// --- contact forms -------------------------------------------------------------

std::optional<Witness> multivector_difference(const Multivector<Q>& a, const Multivector<Q>& b) {
  const auto diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  const auto& [blade, value] = *diff.terms().begin();
  std::ostringstream v;
  v << value;
  return Witness{blade.degree(), Blade{}, blade, v.str()};
}

IdentityReport xi_definitions(const Set& ops) {
  Family f("contact.xi_definitions",
           "(Phi_a + 2 eta_b ^ eta_c)/2 = sum_s (zeta_s ^ phi*_a zeta_s - phi*_b zeta_s ^ phi*_c zeta_s)", 2);
  for (int a = 1; a <= 3; ++a) {
    f.expect(instance_label({{"a", a}}),
             multivector_difference(ops.model.xi_form_from_fundamental(a), ops.model.xi_form(a)),
             "the two forms differ");
  }
  return f.finish();
}

IdentityReport xi_horizontal(const Set& ops) {
  Family f("contact.xi_horizontal", "i_{xi_m} Xi_a = 0", 2);
  for (int a = 1; a <= 3; ++a) {
    for (int m = 1; m <= 3; ++m) {
      const auto contracted = interior(ops.model.frame_vector(FrameLabel::eta(m)), ops.model.xi_form(a));
      f.expect(instance_label({{"a", a}, {"m", m}}), multivector_difference(contracted, {}),
               "contraction is nonzero");
    }
  }
  return f.finish();
}

// --- so(4,1) brackets on the sector ------------------------------------------

IdentityReport L_Lambda_H(const Set& ops) {
  Family f("lie.L_Lambda_H", "[L_a, Lambda_a] = -H", ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    f.expect_equal(instance_label({{"a", a}}), commutator(ops.L[index_of(a)], ops.Lambda[index_of(a)]), -ops.H);
  }
  return f.finish();
}

IdentityReport L_Lambda_K(const Set& ops) {
  Family f("lie.L_Lambda_K", "[L_a, Lambda_b] = K_c and [L_a, Lambda_c] = -K_b for cyclic (a,b,c)",
           ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    const int b = cyclic_next(a);
    const int c = cyclic_next(b);
    f.expect_equal(instance_label({{"a", a}, {"b", b}}),
                   commutator(ops.L[index_of(a)], ops.Lambda[index_of(b)]), ops.K[index_of(c)]);
    f.expect_equal(instance_label({{"a", a}, {"c", c}}),
                   commutator(ops.L[index_of(a)], ops.Lambda[index_of(c)]), -ops.K[index_of(b)]);
  }
  return f.finish();
}

IdentityReport H_brackets(const Set& ops) {
  Family f("lie.H_brackets", "[K_a, H] = 0, [L_a, H] = 2 L_a, [Lambda_a, H] = -2 Lambda_a",
           ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    const std::string inst = instance_label({{"a", a}});
    f.expect_zero("K " + inst, commutator(ops.K[index_of(a)], ops.H));
    f.expect_equal("L " + inst, commutator(ops.L[index_of(a)], ops.H), Q(2) * ops.L[index_of(a)]);
    f.expect_equal("Lambda " + inst, commutator(ops.Lambda[index_of(a)], ops.H), Q(-2) * ops.Lambda[index_of(a)]);
  }
  return f.finish();
}

IdentityReport L_L(const Set& ops) {
  Family f("lie.L_L", "[L_a, L_b] = 0", ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      f.expect_zero(instance_label({{"a", a}, {"b", b}}), commutator(ops.L[index_of(a)], ops.L[index_of(b)]));
    }
  }
  return f.finish();
}

IdentityReport Lambda_Lambda(const Set& ops) {
  Family f("lie.Lambda_Lambda", "[Lambda_a, Lambda_b] = 0", ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      f.expect_zero(instance_label({{"a", a}, {"b", b}}),
                    commutator(ops.Lambda[index_of(a)], ops.Lambda[index_of(b)]));
    }
  }
  return f.finish();
}

IdentityReport K_table(const Set& ops) {
  Family f("lie.K_table",
           "[K_a, L_a] = [K_a, Lambda_a] = 0, [K_a, L_b] = -2 L_c, [K_a, L_c] = 2 L_b, "
           "[K_a, Lambda_b] = -2 Lambda_c, [K_a, Lambda_c] = 2 Lambda_b, [K_a, K_b] = -2 K_c",
           ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    const int b = cyclic_next(a);
    const int c = cyclic_next(b);
    const Op& K = ops.K[index_of(a)];
    const std::string inst = instance_label({{"a", a}});
    f.expect_zero("[K,L_a] " + inst, commutator(K, ops.L[index_of(a)]));
    f.expect_zero("[K,Lambda_a] " + inst, commutator(K, ops.Lambda[index_of(a)]));
    f.expect_equal("[K,L_b] " + inst, commutator(K, ops.L[index_of(b)]), Q(-2) * ops.L[index_of(c)]);
    f.expect_equal("[K,L_c] " + inst, commutator(K, ops.L[index_of(c)]), Q(2) * ops.L[index_of(b)]);
    f.expect_equal("[K,Lambda_b] " + inst, commutator(K, ops.Lambda[index_of(b)]), Q(-2) * ops.Lambda[index_of(c)]);
    f.expect_equal("[K,Lambda_c] " + inst, commutator(K, ops.Lambda[index_of(c)]), Q(2) * ops.Lambda[index_of(b)]);
    f.expect_equal("[K,K_b] " + inst, commutator(K, ops.K[index_of(b)]), Q(-2) * ops.K[index_of(c)]);
  }
  return f.finish();
}

// --- K_{a,s} and I_a -----------------------------------------------------------

IdentityReport K_factorwise(const Set& ops) {
  Family f("K.factorwise", "K_a(r1 ^ ... ^ rk) = sum_j r1 ^ ... ^ phi*_a rj ^ ... ^ rk",
           ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    f.expect_equal(instance_label({{"a", a}}), ops.K[index_of(a)], ops.K_blade[index_of(a)]);
  }
  return f.finish();
}

IdentityReport K_s_base(const Set& ops) {
  Family f("K_s.base", "K_{a,0} = id and K_{a,1} = K_a", ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    const std::string inst = instance_label({{"a", a}});
    f.expect_equal("s=0 " + inst, op_K_s(ops.model, ops.sector, a, 0), ops.id_sector);
    f.expect_equal("s=1 " + inst, op_K_s(ops.model, ops.sector, a, 1), ops.K[index_of(a)]);
  }
  return f.finish();
}

IdentityReport K_s_recursion(const Set& ops) {
  const int top = ops.sector->max_degree();
  Family f("K_s.recursion", "K_a K_{a,s} = (s+1) K_{a,s+1} - (k-s+1) K_{a,s-1} on degree k", top);
  for (int a = 1; a <= 3 && f.ok(); ++a) {
    std::vector<Op> Ks;
    for (int s = 0; s <= top; ++s) Ks.push_back(op_K_s(ops.model, ops.sector, a, s));
    Ks.push_back(Op::zero(ops.sector, DegreeMap::shift(0)));
    for (int s = 1; s <= top; ++s) {
      const Op weight = Op::diagonal(ops.sector, [s](int k) { return Q(k - s + 1); });
      f.expect_equal(instance_label({{"a", a}, {"s", s}}), ops.K[index_of(a)] * Ks[s],
                     Q(s + 1) * Ks[s + 1] - weight * Ks[s - 1]);
    }
  }
  return f.finish();
}

IdentityReport K_s_top(const Set& ops) {
  const int top = ops.sector->max_degree();
  Family f("K_s.top", "K_{a,k} = I_a on degree k", top);
  for (int a = 1; a <= 3; ++a) {
    for (int k = 0; k <= top && f.ok(); ++k) {
      f.expect_equal_where(instance_label({{"a", a}, {"k", k}}), op_K_s(ops.model, ops.sector, a, k),
                           ops.I[index_of(a)], [k](int d) { return d == k; });
    }
  }
  return f.finish();
}

IdentityReport quaternion_odd(const Set& ops) {
  Family f("quaternion.odd_degrees",
           "on odd degrees I_a^2 = -id, I_a I_b = -I_c and I_b I_a = I_c for cyclic (a,b,c)",
           ops.sector->max_degree());
  auto odd = [](int k) { return k % 2 == 1; };
  for (int a = 1; a <= 3; ++a) {
    const int b = cyclic_next(a);
    const int c = cyclic_next(b);
    const Op& Ia = ops.I[index_of(a)];
    const Op& Ib = ops.I[index_of(b)];
    const Op& Ic = ops.I[index_of(c)];
    const std::string inst = instance_label({{"a", a}});
    f.expect_equal_where("square " + inst, Ia * Ia, -ops.id_sector, odd);
    f.expect_equal_where("I_a I_b " + inst, Ia * Ib, -Ic, odd);
    f.expect_equal_where("I_b I_a " + inst, Ib * Ia, Ic, odd);
  }
  return f.finish();
}

IdentityReport quaternion_even(const Set& ops) {
  Family f("quaternion.even_degrees", "on even degrees I_a^2 = id", ops.sector->max_degree());
  for (int a = 1; a <= 3; ++a) {
    f.expect_equal_where(instance_label({{"a", a}}), ops.I[index_of(a)] * ops.I[index_of(a)], ops.id_sector,
                         [](int k) { return k % 2 == 0; });
  }
  return f.finish();
}

using Check = IdentityReport (*)(const Set&);

constexpr Check kChecks[] = {
    lambda_l,          lambda_lambda,       l_l,          idempotent_square, idempotent_commute,
    cube_isomorphisms, hodge_involution,    hodge_contraction, lambda_star_vs_contraction,
    horizontal_commute_e, sector_preserved, xi_definitions, xi_horizontal, L_Lambda_H,
    L_Lambda_K,        H_brackets,          L_L,          Lambda_Lambda,     K_table,
    K_factorwise,      K_s_base,            K_s_recursion, K_s_top,          quaternion_odd,
    quaternion_even,
};

IdentityReport failure_from_exception(std::string name, const std::exception& e) {
  IdentityReport r;
  r.name = std::move(name);
  r.statement = "operators of the model can be constructed";
  r.passed = false;
  r.detail = e.what();
  if (const auto* domain = dynamic_cast<const OperatorDomainError*>(&e)) {
    r.witness = domain->witness();
  } else {
    r.witness = Witness{};
  }
  return r;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("COSYM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

IdentityReport check_fundamental_form_table(const ContactModel<Rational>& model) {
  const ModelDims dims = model.dims();
  const int D = dims.dim();
  Family f("contact.fundamental_form_pairings",
           "<Phi_a, X_s ^ phi_a X_s> = <Phi_a, phi_b X_s ^ phi_c X_s> = <Phi_a, xi_b ^ xi_c> = -1, "
           "0 on every other frame bivector",
           2);
  std::vector<KVector<Q>> frame;
  for (int i = 0; i < D; ++i) frame.push_back(model.frame_vector(FrameLabel::from_index(dims, i)));
  for (int a = 1; a <= 3 && f.ok(); ++a) {
    const int b = cyclic_next(a);
    const int c = cyclic_next(b);
    // expected[(i, j)] for the listed ordered pairs; everything else pairs to 0
    std::map<std::pair<int, int>, int> expected;
    auto listed = [&](const FrameLabel& u, const FrameLabel& v) {
      expected[{u.index(dims), v.index(dims)}] = -1;
      expected[{v.index(dims), u.index(dims)}] = 1;
    };
    for (int s = 1; s <= dims.n; ++s) {
      listed(FrameLabel::zeta(s), FrameLabel::phi_zeta(a, s));
      listed(FrameLabel::phi_zeta(b, s), FrameLabel::phi_zeta(c, s));
    }
    listed(FrameLabel::eta(b), FrameLabel::eta(c));
    const auto phi = model.fundamental_form(a);
    for (int i = 0; i < D && f.ok(); ++i) {
      for (int j = 0; j < D; ++j) {
        if (i == j) continue;
        const Q value = pairing(phi, wedge(frame[i], frame[j]));
        const auto it = expected.find({i, j});
        const Q want(it == expected.end() ? 0 : it->second);
        if (value != want) {
          std::ostringstream v;
          v << value - want;
          f.expect(instance_label({{"a", a}}) + " " + FrameLabel::from_index(dims, i).name() + "^" +
                       FrameLabel::from_index(dims, j).name(),
                   Witness{2, Blade::from_mask((1u << i) | (1u << j)), Blade{}, v.str()},
                   "pairing differs from the table");
          break;
        }
      }
    }
  }
  return f.finish();
}

IdentityReport check_structure_relations(const ContactModel<Rational>& model) {
  const ModelDims dims = model.dims();
  const int D = dims.dim();
  Family f("contact.structure_relations",
           "phi_a phi_b - eta_b (x) xi_a = sum_c eps_abc phi_c - delta_ab id, phi_a xi_b = sum_c eps_abc xi_c", 1);
  // phi[a](row, col): component along frame vector `row` of phi_a applied to frame vector `col`
  std::array<MatrixX<Q>, 3> phi;
  for (int a = 1; a <= 3; ++a) {
    phi[a - 1] = MatrixX<Q>::Zero(D, D);
    for (int col = 0; col < D; ++col) {
      const auto image = model.phi(a, KVector<Q>::basis(col));
      for (const auto& [b, c] : image.terms()) phi[a - 1](b.indices().front(), col) = c;
    }
  }
  auto report = [&](const std::string& instance, const MatrixX<Q>& diff) {
    for (Eigen::Index col = 0; col < D; ++col) {
      for (Eigen::Index row = 0; row < D; ++row) {
        if (diff(row, col) == 0) continue;
        std::ostringstream v;
        v << diff(row, col);
        f.expect(instance, Witness{1, Blade::single(static_cast<int>(col)), Blade::single(static_cast<int>(row)), v.str()},
                 "lhs - rhs is nonzero");
        return;
      }
    }
  };
  for (int a = 1; a <= 3 && f.ok(); ++a) {
    for (int b = 1; b <= 3 && f.ok(); ++b) {
      MatrixX<Q> lhs = phi[a - 1] * phi[b - 1];
      lhs(dims.eta_index(a), dims.eta_index(b)) -= 1;
      MatrixX<Q> rhs = MatrixX<Q>::Zero(D, D);
      for (int c = 1; c <= 3; ++c) rhs += Q(levi_civita(a, b, c)) * phi[c - 1];
      if (a == b) rhs -= MatrixX<Q>::Identity(D, D);
      report(instance_label({{"a", a}, {"b", b}}), lhs - rhs);
      Eigen::Matrix<Q, Eigen::Dynamic, 1> xi = Eigen::Matrix<Q, Eigen::Dynamic, 1>::Zero(D);
      for (int c = 1; c <= 3; ++c) xi(dims.eta_index(c)) = Q(levi_civita(a, b, c));
      MatrixX<Q> diff = MatrixX<Q>::Zero(D, D);
      diff.col(dims.eta_index(b)) = phi[a - 1].col(dims.eta_index(b)) - xi;
      report(instance_label({{"a", a}, {"b", b}}) + " on xi", diff);
    }
  }
  return f.finish();
}

std::vector<IdentityReport> verify_identities(const ContactModel<Rational>& model, int threads) {
  std::vector<IdentityReport> reports;
  std::optional<Set> ops;
  try {
    ops = Set::build(model);
  } catch (const std::exception& e) {
    reports.push_back(failure_from_exception("model.construction", e));
  }

  std::vector<std::function<IdentityReport()>> tasks;
  tasks.emplace_back([&model] { return check_fundamental_form_table(model); });
  tasks.emplace_back([&model] { return check_structure_relations(model); });
  if (ops) {
    for (Check check : kChecks) tasks.emplace_back([check, &ops] { return check(*ops); });
  }

  std::vector<IdentityReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = failure_from_exception("task." + std::to_string(i), e);
      }
    }
  };
  const int count = std::clamp(threads > 0 ? threads : default_thread_count(), 1, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  reports.insert(reports.end(), std::make_move_iterator(results.begin()), std::make_move_iterator(results.end()));
  std::sort(reports.begin(), reports.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return reports;
}

std::vector<IdentityReport> verify_identities(int n, int threads) {
  return verify_identities(ContactModel<Rational>(ModelDims::make(n)), threads);
}

}  // namespace cosym
