#include "cosym/betti.hpp"

#include "cosym/blade_space.hpp"
#include "cosym/contact_model.hpp"
#include "cosym/exact_linear_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cosym {

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

HorizontalBettiSequence::HorizontalBettiSequence(int n, std::vector<Count> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0) throw std::invalid_argument("negative quaternionic rank");
  if (static_cast<int>(values_.size()) != 4 * n + 1) {
    throw std::invalid_argument("expected " + std::to_string(4 * n + 1) + " horizontal Betti numbers, got " +
                                std::to_string(values_.size()));
  }
  for (Count v : values_) {
    if (v < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
  }
}

Count HorizontalBettiSequence::at(int k) const {
  return k < 0 || k >= static_cast<int>(values_.size()) ? 0 : values_[k];
}

BettiSequence::BettiSequence(std::vector<Count> values) : values_(std::move(values)) {
  for (Count v : values_) {
    if (v < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
  }
}

Count BettiSequence::at(int k) const {
  return k < 0 || k >= static_cast<int>(values_.size()) ? 0 : values_[k];
}

Count BettiSequence::total() const {
  Count s = 0;
  for (Count v : values_) s += v;
  return s;
}

Count BettiSequence::euler_characteristic() const {
  Count s = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * values_[k];
  return s;
}

bool BettiSequence::is_palindromic() const {
  return std::equal(values_.begin(), values_.end(), values_.rbegin());
}

PoincareSeries::PoincareSeries(std::vector<Count> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

PoincareSeries PoincareSeries::binomial_power(int k) {
  std::vector<Count> c;
  for (int i = 0; i <= k; ++i) c.push_back(binomial(k, i));
  return PoincareSeries(std::move(c));
}

Count PoincareSeries::at(int k) const {
  return k < 0 || k >= static_cast<int>(coefficients_.size()) ? 0 : coefficients_[k];
}

PoincareSeries series_product(const PoincareSeries& a, const PoincareSeries& b) {
  if (a.coefficients().empty() || b.coefficients().empty()) return {};
  std::vector<Count> c(a.coefficients().size() + b.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  }
  return PoincareSeries(std::move(c));
}

BettiSequence betti_from_horizontal(const HorizontalBettiSequence& bh) {
  const int top = 4 * bh.n() + 3;
  std::vector<Count> b(top + 1);
  for (int k = 0; k <= top; ++k) {
    b[k] = bh.at(k) + 3 * bh.at(k - 1) + 3 * bh.at(k - 2) + bh.at(k - 3);
  }
  return BettiSequence(std::move(b));
}

bool ConstraintReport::passed(bool strict) const { return failures(strict).empty(); }

std::vector<ConstraintCheck> ConstraintReport::failures(bool strict) const {
  std::vector<ConstraintCheck> out;
  for (const auto& c : checks) {
    if (!c.passed && (strict || c.severity == ConstraintCheck::Severity::error)) out.push_back(c);
  }
  return out;
}

namespace {

ConstraintCheck divisible_by_four(std::string name, int k, Count value, std::string statement) {
  const Count residue = ((value % 4) + 4) % 4;
  return {std::move(name), k, value, residue, residue == 0, ConstraintCheck::Severity::error, std::move(statement)};
}

ConstraintCheck at_least(std::string name, int k, Count value, Count bound, std::string statement) {
  return {std::move(name), k, value, value - bound, value >= bound, ConstraintCheck::Severity::error,
          std::move(statement)};
}

}  // namespace

ConstraintReport check_divisibility(const BettiSequence& b) {
  ConstraintReport r;
  for (int k = 1; k <= b.top_degree(); k += 2) {
    r.checks.push_back(divisible_by_four("divisibility", k, b.at(k - 1) + b.at(k),
                                         "b_" + std::to_string(k - 1) + " + b_" + std::to_string(k) + " = 0 mod 4"));
  }
  return r;
}

ConstraintReport check_bounds(const BettiSequence& b, int n) {
  ConstraintReport r;
  for (int k = 0; k <= 2 * n + 1; ++k) {
    r.checks.push_back(at_least("lower_bound", k, b.at(k), binomial(k + 2, 2),
                                "b_" + std::to_string(k) + " >= " + std::to_string(binomial(k + 2, 2))));
  }
  return r;
}

ConstraintReport check_horizontal_constraints(const HorizontalBettiSequence& bh) {
  ConstraintReport r;
  const int top = 4 * bh.n();
  for (int k = 1; k <= top; k += 2) {
    r.checks.push_back(divisible_by_four("horizontal_divisibility", k, bh.at(k),
                                         "b^h_" + std::to_string(k) + " = 0 mod 4"));
  }
  for (int k = 0; k <= bh.n(); ++k) {
    r.checks.push_back(at_least("horizontal_lower_bound", 2 * k, bh.at(2 * k), binomial(k + 2, 2),
                                "b^h_" + std::to_string(2 * k) + " >= " + std::to_string(binomial(k + 2, 2))));
  }
  for (int k = 0; 2 * k < top; ++k) {
    ConstraintCheck c;
    c.name = "horizontal_duality";
    c.k = k;
    c.value = bh.at(k);
    c.margin = bh.at(k) - bh.at(top - k);
    c.passed = c.margin == 0;
    c.severity = ConstraintCheck::Severity::warning;
    c.statement = "b^h_" + std::to_string(k) + " = b^h_" + std::to_string(top - k);
    r.checks.push_back(c);
  }
  return r;
}

SkRankResult s_k_rank(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("s_k_rank: need 0 <= k <= n");
  const ModelDims dims = ModelDims::make(n);
  const ContactModel<Rational> model(dims);
  std::array<Multivector<Rational>, 3> xi = {model.xi_form(1), model.xi_form(2), model.xi_form(3)};

  SkRankResult result;
  result.n = n;
  result.k = k;
  std::vector<Multivector<Rational>> products;
  for (int k1 = k; k1 >= 0; --k1) {
    for (int k2 = k - k1; k2 >= 0; --k2) {
      const int k3 = k - k1 - k2;
      products.push_back(
          wedge(wedge(wedge_power(xi[0], k1), wedge_power(xi[1], k2)), wedge_power(xi[2], k3)));
    }
  }
  result.products = static_cast<int>(products.size());

  const auto space = BladeSpace::horizontal(dims);
  MatrixX<Rational> m = MatrixX<Rational>::Zero(space->dim(2 * k), result.products);
  for (int j = 0; j < result.products; ++j) {
    for (const auto& [blade, c] : products[j].terms()) m(*space->index_of(blade), j) = c;
    if (auto lead = leading_blade(products[j])) result.leading.push_back(*lead);
  }
  result.rank = exact_rank(m);
  const std::set<Blade> distinct(result.leading.begin(), result.leading.end());
  result.leading_distinct =
      static_cast<int>(result.leading.size()) == result.products && static_cast<int>(distinct.size()) == result.products;
  return result;
}

}  // namespace cosym
