#include "cosym/smith_normal_form.hpp"
#include "oracles/topology_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cosym;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<long long> factors(const SmithResult& r) {
  std::vector<long long> out;
  for (const auto& d : r.invariant_factors) out.push_back(d.convert_to<long long>());
  return out;
}

}  // namespace

TEST(SmithNormalForm, Examples) {
  const auto r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(factors(r), (std::vector<long long>{1, 6}));
  EXPECT_EQ(r.torsion().size(), 1u);
  EXPECT_EQ(smith_normal_form(IntMatrix::Zero(3, 4)).rank(), 0);
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 0)).rank(), 0);
  EXPECT_EQ(factors(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}))),
            (std::vector<long long>{2, 6, 12}));
}

TEST(SmithNormalForm, AgreesWithDeterminantDivisorsOnRandomMatrices) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long long> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = size(rng), cols = size(rng);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = trial % 3 == 0 ? 2 * entry(rng) : entry(rng);
    const auto r = smith_normal_form(from_rows(m));
    EXPECT_EQ(factors(r), oracle::invariant_factors_by_minors(m)) << "trial " << trial;
    for (std::size_t i = 1; i < r.invariant_factors.size(); ++i) {
      EXPECT_EQ(r.invariant_factors[i] % r.invariant_factors[i - 1], 0);
    }
  }
}

TEST(SmithNormalForm, NoOverflowOnLargeEntries) {
  IntMatrix m(2, 2);
  m(0, 0) = BigInt("123456789012345678901234567890");
  m(0, 1) = BigInt(0);
  m(1, 0) = BigInt(0);
  m(1, 1) = BigInt("98765432109876543210");
  const auto r = smith_normal_form(m);
  ASSERT_EQ(r.rank(), 2);
  using boost::multiprecision::gcd;
  EXPECT_EQ(r.invariant_factors[0], gcd(m(0, 0), m(1, 1)));
  EXPECT_EQ(r.invariant_factors[0] * r.invariant_factors[1], m(0, 0) * m(1, 1));
}
