#include "cosym/so41.hpp"

#include "cosym/exact_linear_algebra.hpp"
#include "cosym/operators.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace cosym {
namespace {

using Q = Rational;
using Op = Operator<Q>;

Matrix5 unit(int i, int j) {
  Matrix5 m = Matrix5::Zero();
  m(i - 1, j - 1) = Q(1);
  return m;
}

std::string t_name(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }

Combination zero_combination() {
  Combination c;
  c.fill(Q(0));
  return c;
}

Combination single(Generator g, int coefficient) {
  Combination c = zero_combination();
  c[generator_index(g)] = Q(coefficient);
  return c;
}

enum class Family { H, L, Lambda, K };

std::pair<Family, int> split(Generator g) {
  const int i = generator_index(g);
  if (i == 0) return {Family::H, 0};
  return {static_cast<Family>(1 + (i - 1) / 3), (i - 1) % 3 + 1};
}

/// [x, y] for x listed no later than y in the relations; nullopt when only [y, x] is listed.
std::optional<Combination> listed_bracket(Generator x, Generator y) {
  const auto [fx, a] = split(x);
  const auto [fy, b] = split(y);
  const int next = a == 0 ? 0 : cyclic_next(a);
  const int prev = a == 0 ? 0 : cyclic_next(next);
  if (x == y) return zero_combination();
  switch (fx) {
    case Family::L:
      if (fy == Family::Lambda) {
        if (b == a) return single(Generator::H, -1);
        if (b == next) return single(K_generator(prev), 1);
        return single(K_generator(next), -1);
      }
      if (fy == Family::H) return single(x, 2);
      if (fy == Family::L) return zero_combination();
      return std::nullopt;
    case Family::Lambda:
      if (fy == Family::H) return single(x, -2);
      if (fy == Family::Lambda) return zero_combination();
      return std::nullopt;
    case Family::K:
      if (fy == Family::H) return zero_combination();
      if (b == a && (fy == Family::L || fy == Family::Lambda)) return zero_combination();
      if (fy == Family::L) return b == next ? single(L_generator(prev), -2) : single(L_generator(next), 2);
      if (fy == Family::Lambda) {
        return b == next ? single(Lambda_generator(prev), -2) : single(Lambda_generator(next), 2);
      }
      if (fy == Family::K) {
        if (b == next) return single(K_generator(prev), -2);
        return single(K_generator(next), 2);  // [K_a, K_c] = -[K_c, K_a] = 2 K_b
      }
      return std::nullopt;
    case Family::H:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Entries of a graded operator keyed by (degree shift, source degree, row, col).
using FlatKey = std::tuple<int, int, int, int>;

std::map<FlatKey, Q> flatten(const Op& op) {
  std::map<FlatKey, Q> out;
  const int shift = *op.degree_map().as_shift();
  for (int k = 0; k <= op.max_degree(); ++k) {
    const auto& block = op.block(k);
    for (int j = 0; j < block.outerSize(); ++j) {
      for (typename Op::Block::InnerIterator it(block, j); it; ++it) {
        out.emplace(FlatKey{shift, k, static_cast<int>(it.row()), j}, it.value());
      }
    }
  }
  return out;
}

}  // namespace

Matrix5 signature_matrix() {
  Matrix5 e = Matrix5::Identity();
  e(4, 4) = Q(-1);
  return e;
}

bool satisfies_defining_relation(const Matrix5& a) {
  const Matrix5 e = signature_matrix();
  return Matrix5(a * e + e * a.transpose()) == Matrix5::Zero();
}

LieElement::LieElement(const Matrix5& m) : m_(m) {
  if (!satisfies_defining_relation(m_)) throw std::invalid_argument("matrix is not in so(4,1)");
}

LieElement LieElement::zero() { return LieElement(Matrix5::Zero()); }

LieElement& LieElement::operator+=(const LieElement& o) {
  m_ += o.m_;
  return *this;
}
LieElement& LieElement::operator-=(const LieElement& o) {
  m_ -= o.m_;
  return *this;
}
LieElement& LieElement::operator*=(const Rational& s) {
  m_ *= s;
  return *this;
}

LieElement basis_t(int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5 || i == j) throw std::out_of_range("basis_t: index out of range");
  if (i > j) {
    if (i == 5) throw std::out_of_range("basis_t: t_5j is not defined");
    return -basis_t(j, i);
  }
  if (j == 5) return LieElement(unit(i, 5) + unit(5, i));
  return LieElement(unit(i, j) - unit(j, i));
}

std::vector<LieElement> t_basis() {
  std::vector<LieElement> out;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) out.push_back(basis_t(i, j));
  }
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  return LieElement(Matrix5(a.matrix() * b.matrix() - b.matrix() * a.matrix()));
}

Generator L_generator(int alpha) {
  check_alpha(alpha);
  return kGenerators[alpha];
}
Generator Lambda_generator(int alpha) {
  check_alpha(alpha);
  return kGenerators[3 + alpha];
}
Generator K_generator(int alpha) {
  check_alpha(alpha);
  return kGenerators[6 + alpha];
}

std::string_view generator_name(Generator g) {
  static constexpr std::array<std::string_view, 10> names = {
      "H", "L1", "L2", "L3", "Lambda1", "Lambda2", "Lambda3", "K1", "K2", "K3",
  };
  return names[generator_index(g)];
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (Generator g : kGenerators) {
    if (generator_name(g) == name) return g;
  }
  return std::nullopt;
}

LieElement iso_map(Generator g) {
  const auto [family, a] = split(g);
  switch (family) {
    case Family::H: return Q(2) * basis_t(4, 5);
    case Family::L: return basis_t(a, 5) + basis_t(a, 4);
    case Family::Lambda: return basis_t(a, 5) - basis_t(a, 4);
    case Family::K: {
      const int b = cyclic_next(a);
      return Q(2) * basis_t(b, cyclic_next(b));
    }
  }
  throw std::logic_error("iso_map: unreachable");
}

LieElement iso_map(std::string_view name) {
  const auto g = parse_generator(name);
  if (!g) throw std::invalid_argument("iso_map: unknown generator '" + std::string(name) + "'");
  return iso_map(*g);
}

Combination operator_bracket_table(Generator x, Generator y) {
  if (auto c = listed_bracket(x, y)) return *c;
  auto c = listed_bracket(y, x);
  if (!c) throw std::logic_error("operator_bracket_table: missing relation");
  for (auto& v : *c) v = -v;
  return *c;
}

LieElement evaluate(const Combination& c) {
  LieElement out = LieElement::zero();
  for (Generator g : kGenerators) {
    if (c[generator_index(g)] != 0) out += c[generator_index(g)] * iso_map(g);
  }
  return out;
}

std::vector<TableEntry> check_t_bracket_table() {
  std::vector<TableEntry> out;
  auto check = [&](int i1, int j1, int i2, int j2, int sign, int i3, int j3) {
    const LieElement want = Q(sign) * basis_t(i3, j3);
    out.push_back(TableEntry{"[" + t_name(i1, j1) + "," + t_name(i2, j2) + "] = " + (sign < 0 ? "-" : "") +
                                 t_name(i3, j3),
                             bracket(basis_t(i1, j1), basis_t(i2, j2)) == want});
  };
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) {
        check(i, j, i, k, -1, j, k);
        check(i, j, j, k, 1, i, k);
        check(i, k, j, k, -1, i, j);
      }
      check(i, j, i, 5, -1, j, 5);
      check(i, j, j, 5, 1, i, 5);
      check(i, 5, j, 5, 1, i, j);
    }
  }
  return out;
}

int iso_image_rank() {
  MatrixX<Q> m(25, 10);
  for (Generator g : kGenerators) {
    const Matrix5& a = iso_map(g).matrix();
    for (int r = 0; r < 5; ++r) {
      for (int c = 0; c < 5; ++c) m(5 * r + c, generator_index(g)) = a(r, c);
    }
  }
  return exact_rank(m);
}

const PairCheck* ModuleReport::first_failure() const {
  for (const auto& p : pairs) {
    if (!p.passed()) return &p;
  }
  return nullptr;
}

IdentityReport ModuleReport::summary() const {
  IdentityReport r;
  r.name = "so41.module";
  r.statement = "H, L_a, Lambda_a, K_a span a copy of so(4,1) with H -> 2 t45, L_a -> t_a5 + t_a4, "
                "Lambda_a -> t_a5 - t_a4, K_a -> 2 t_bc";
  r.passed = passed;
  r.max_degree = 4 * n;
  if (const PairCheck* p = first_failure()) {
    r.instance = "[" + std::string(generator_name(p->x)) + "," + std::string(generator_name(p->y)) + "]";
    r.detail = !p->in_span ? "bracket outside the span"
               : !p->matches_table ? "structure constants differ from the bracket relations"
                                   : "not a homomorphism";
    r.witness = Witness{};
  } else if (!passed) {
    r.detail = "span rank " + std::to_string(span_rank) + ", image rank " + std::to_string(image_rank);
    r.witness = Witness{};
  }
  return r;
}

ModuleReport verify_module(const ContactModel<Rational>& model, const ModuleOptions& options) {
  const ModelDims dims = model.dims();
  const auto sector = BladeSpace::horizontal(dims);

  std::vector<Op> ops;
  ops.push_back(op_H<Q>(dims, sector));
  for (int a = 1; a <= 3; ++a) ops.push_back(op_L(model, sector, a));
  for (int a = 1; a <= 3; ++a) ops.push_back(op_Lambda(model, sector, a));
  for (int a = 1; a <= 3; ++a) ops.push_back(op_K(model, sector, a));
  if (options.negated) ops[generator_index(*options.negated)] *= Q(-1);

  // Column g of `span` is operator g, restricted to the union of all supports.
  std::vector<std::map<FlatKey, Q>> flat;
  std::map<FlatKey, int> rows;
  for (const Op& op : ops) {
    flat.push_back(flatten(op));
    for (const auto& entry : flat.back()) rows.emplace(entry.first, 0);
  }
  // Brackets of degree-shifting operators land in shifts -4..4; reserve their rows lazily.
  std::vector<std::vector<std::map<FlatKey, Q>>> brackets(10, std::vector<std::map<FlatKey, Q>>(10));
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const Op c = commutator(ops[i], ops[j]);
      if (c.degree_map().as_shift() && std::abs(*c.degree_map().as_shift()) <= 2) {
        brackets[i][j] = flatten(c);
      } else {
        // shifts +-4 cannot lie in the span; keep them as a nonzero marker if nonzero
        if (!c.is_zero()) brackets[i][j].emplace(FlatKey{99, 0, 0, 0}, Q(1));
      }
      for (const auto& entry : brackets[i][j]) rows.emplace(entry.first, 0);
    }
  }
  int next_row = 0;
  for (auto& [key, index] : rows) index = next_row++;

  MatrixX<Q> span = MatrixX<Q>::Zero(next_row, 10);
  for (int g = 0; g < 10; ++g) {
    for (const auto& [key, value] : flat[g]) span(rows.at(key), g) = value;
  }

  ModuleReport report;
  report.n = dims.n;
  report.span_rank = exact_rank(span);
  report.image_rank = iso_image_rank();
  const auto lu = exact_lu(span);

  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      PairCheck p;
      p.x = kGenerators[i];
      p.y = kGenerators[j];
      Eigen::Matrix<Q, Eigen::Dynamic, 1> b = Eigen::Matrix<Q, Eigen::Dynamic, 1>::Zero(next_row);
      for (const auto& [key, value] : brackets[i][j]) b(rows.at(key)) = value;
      p.operator_side = zero_combination();
      if (report.span_rank == 10) {
        const Eigen::Matrix<Q, Eigen::Dynamic, 1> x = lu.solve(b);
        p.in_span = (span * x - b).isZero(Q(0));
        if (p.in_span) {
          for (int g = 0; g < 10; ++g) p.operator_side[g] = x(g);
        }
      }
      p.matches_table = p.in_span && p.operator_side == operator_bracket_table(p.x, p.y);
      p.homomorphism = p.in_span && bracket(iso_map(p.x), iso_map(p.y)) == evaluate(p.operator_side);
      report.pairs.push_back(p);
    }
  }
  report.passed = report.span_rank == 10 && report.image_rank == 10 && report.first_failure() == nullptr;
  return report;
}

ModuleReport verify_module(int n, const ModuleOptions& options) {
  return verify_module(ContactModel<Rational>(ModelDims::make(n)), options);
}

}  // namespace cosym
