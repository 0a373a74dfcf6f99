#include "cosym/exact_linear_algebra.hpp"
#include "cosym/so41.hpp"
#include "oracles/so41_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cosym;
using Q = Rational;

namespace {

oracle::Int5 to_int(const LieElement& x) {
  oracle::Int5 m{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = x.matrix()(i, j).convert_to<long long>();
  return m;
}

/// Oracle images of the generators.
oracle::Int5 oracle_iso(Generator g) {
  const int i = generator_index(g);
  if (i == 0) return oracle::scale5(oracle::t(4, 5), 2);
  if (i <= 3) return oracle::add5(oracle::t(i, 5), oracle::t(i, 4));
  if (i <= 6) return oracle::add5(oracle::t(i - 3, 5), oracle::t(i - 3, 4), -1);
  const int a = i - 6;
  const int b = a % 3 + 1, c = b % 3 + 1;
  return b < c ? oracle::scale5(oracle::t(b, c), 2) : oracle::scale5(oracle::t(c, b), -2);
}

}  // namespace

TEST(So41, BasisSatisfiesDefiningRelation) {
  EXPECT_TRUE(satisfies_defining_relation(basis_t(1, 2).matrix()));
  EXPECT_TRUE(satisfies_defining_relation(basis_t(1, 5).matrix()));
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      EXPECT_EQ(to_int(basis_t(i, j)), oracle::t(i, j));
      EXPECT_EQ(oracle::defining_defect(oracle::t(i, j)), oracle::zero5());
    }
  }
  EXPECT_EQ(basis_t(3, 1), -basis_t(1, 3));
  EXPECT_THROW(basis_t(0, 2), std::out_of_range);
  EXPECT_THROW(basis_t(2, 2), std::out_of_range);
  EXPECT_THROW(basis_t(5, 1), std::out_of_range);
}

TEST(So41, BasisIsIndependent) {
  const auto basis = t_basis();
  ASSERT_EQ(basis.size(), 10u);
  MatrixX<Q> m(25, 10);
  for (int c = 0; c < 10; ++c)
    for (int i = 0; i < 25; ++i) m(i, c) = basis[c].matrix()(i / 5, i % 5);
  EXPECT_EQ(exact_rank(m), 10);
}

TEST(So41, LieElementRejectsNonMembers) {
  Matrix5 m = Matrix5::Zero();
  m(0, 1) = 1;
  EXPECT_THROW(LieElement{m}, std::invalid_argument);
}

TEST(So41, BracketExamples) {
  EXPECT_EQ(bracket(basis_t(1, 2), basis_t(1, 3)), -basis_t(2, 3));
  EXPECT_EQ(bracket(basis_t(1, 5), basis_t(2, 5)), basis_t(1, 2));
  EXPECT_EQ(bracket(basis_t(1, 5) + basis_t(1, 4), basis_t(1, 5) - basis_t(1, 4)), Q(-2) * basis_t(4, 5));
}

TEST(So41, BracketMatchesIntegerCommutatorAndCloses) {
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l) {
          const auto b = bracket(basis_t(i, j), basis_t(k, l));
          EXPECT_EQ(to_int(b), oracle::commutator5(oracle::t(i, j), oracle::t(k, l)));
          EXPECT_TRUE(satisfies_defining_relation(b.matrix()));
        }
}

TEST(So41, FullTBracketTable) {
  const auto table = check_t_bracket_table();
  EXPECT_EQ(table.size(), 4u * 3 + 6u * 3);  // i<j<k<5 triples and i<j<5 pairs
  for (const auto& e : table) EXPECT_TRUE(e.passed) << e.relation;
}

TEST(So41, IsoMapAssignment) {
  EXPECT_EQ(iso_map("H"), Q(2) * basis_t(4, 5));
  EXPECT_EQ(iso_map(Generator::L2), basis_t(2, 5) + basis_t(2, 4));
  EXPECT_EQ(iso_map("Lambda3"), basis_t(3, 5) - basis_t(3, 4));
  EXPECT_EQ(iso_map("K1"), Q(2) * basis_t(2, 3));
  EXPECT_THROW(iso_map("M7"), std::invalid_argument);
  for (Generator g : kGenerators) {
    EXPECT_EQ(to_int(iso_map(g)), oracle_iso(g)) << generator_name(g);
    EXPECT_EQ(parse_generator(generator_name(g)), g);
  }
  EXPECT_EQ(iso_image_rank(), 10);
}

// The operator bracket table mapped through the oracle images agrees with integer
// commutators of those images.
TEST(So41, OperatorTableIsHomomorphicInOracle) {
  for (Generator x : kGenerators) {
    for (Generator y : kGenerators) {
      const Combination c = operator_bracket_table(x, y);
      oracle::Int5 rhs{};
      for (Generator g : kGenerators) {
        const Q coeff = c[generator_index(g)];
        ASSERT_EQ(denominator(coeff), 1);
        rhs = oracle::add5(rhs, oracle_iso(g), numerator(coeff).convert_to<long long>());
      }
      EXPECT_EQ(oracle::commutator5(oracle_iso(x), oracle_iso(y)), rhs)
          << generator_name(x) << "," << generator_name(y);
    }
  }
}

class So41Module : public ::testing::TestWithParam<int> {};

TEST_P(So41Module, VerifyModulePasses) {
  const auto report = verify_module(GetParam());
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.pairs.size(), 45u);
  EXPECT_EQ(report.span_rank, 10);
  EXPECT_EQ(report.image_rank, 10);
  EXPECT_EQ(report.first_failure(), nullptr);
  EXPECT_TRUE(report.summary().passed);
  for (const auto& p : report.pairs) EXPECT_TRUE(p.passed());
}

INSTANTIATE_TEST_SUITE_P(Ranks, So41Module, ::testing::Values(1, 2));

TEST(So41, NegatedK3FailsOnlyWherePairTouchesK3) {
  ModuleOptions options;
  options.negated = Generator::K3;
  const auto report = verify_module(1, options);
  EXPECT_FALSE(report.passed);
  ASSERT_NE(report.first_failure(), nullptr);
  const auto k3 = static_cast<std::size_t>(
      std::find(kGenerators.begin(), kGenerators.end(), Generator::K3) - kGenerators.begin());
  // a pair can only break if K3 is an operand or appears in its bracket
  for (const auto& p : report.pairs) {
    const bool touches = p.x == Generator::K3 || p.y == Generator::K3 ||
                         operator_bracket_table(p.x, p.y)[k3] != Rational(0);
    if (!p.passed()) EXPECT_TRUE(touches);
  }
  EXPECT_FALSE(report.summary().passed);
}

#ifdef COSYM_SLOW_TESTS
TEST(So41Slow, RankThree) { EXPECT_TRUE(verify_module(3).passed); }
#endif
