#include "cosym/blade_space.hpp"
#include "cosym/contact_model.hpp"
#include "cosym/multivector.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cosym;
using testing_support::from_form;
using testing_support::to_form;
using testing_support::to_frac;
using Q = Rational;
using MV = Multivector<Q>;

namespace {

MV e(int i) { return MV::basis(i); }

MV random_form(std::mt19937& rng, int D, int terms) {
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << D) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  MV out;
  for (int t = 0; t < terms; ++t) out.add(Blade::from_mask(mask(rng)), Q(coeff(rng)));
  return out;
}

MV homogeneous_part(const MV& w, int k) {
  MV out;
  for (const auto& [b, c] : w.terms()) {
    if (b.degree() == k) out.add(b, c);
  }
  return out;
}

}  // namespace

TEST(Blade, IndicesRoundTripAndOrder) {
  const Blade b = Blade::from_indices({1, 4, 6});
  EXPECT_EQ(b.degree(), 3);
  EXPECT_EQ(b.indices(), (std::vector<int>{1, 4, 6}));
  EXPECT_THROW(Blade::from_indices({3, 2}), std::invalid_argument);
  EXPECT_THROW(Blade::from_indices({2, 2}), std::invalid_argument);
  EXPECT_LT(Blade::from_indices({5}), Blade::from_indices({0, 1}));
  EXPECT_LT(Blade::from_indices({0, 3}), Blade::from_indices({1, 2}));
}

TEST(Blade, WedgeSignMatchesInversionCount) {
  for (std::uint32_t a = 0; a < 64; ++a) {
    for (std::uint32_t b = 0; b < 64; ++b) {
      const Blade x = Blade::from_mask(a), y = Blade::from_mask(b);
      oracle::Indices seq = x.indices();
      const auto yi = y.indices();
      seq.insert(seq.end(), yi.begin(), yi.end());
      EXPECT_EQ(wedge_sign(x, y), oracle::sort_sign(seq)) << a << " " << b;
    }
  }
}

TEST(Wedge, Examples) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  const MV zeta1 = m.coframe(FrameLabel::zeta(1));
  EXPECT_TRUE(wedge(zeta1, zeta1).is_zero());
  const MV e21 = wedge(e(2), e(1));
  EXPECT_EQ(e21.coefficient(Blade::from_indices({1, 2})), Q(-1));
  const MV eta23 = wedge(m.coframe(FrameLabel::eta(2)), m.coframe(FrameLabel::eta(3)));
  EXPECT_EQ(eta23, MV::blade(Blade::from_indices({dims.eta_index(2), dims.eta_index(3)})));
}

TEST(Wedge, GradedCommutativityAndAssociativityOnRandomForms) {
  std::mt19937 rng(20240611);
  const int D = 7;
  for (int trial = 0; trial < 200; ++trial) {
    const MV a = random_form(rng, D, 3), b = random_form(rng, D, 3), c = random_form(rng, D, 3);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    for (int p = 0; p <= D; ++p) {
      for (int q = 0; q <= D; ++q) {
        const MV ap = homogeneous_part(a, p), bq = homogeneous_part(b, q);
        const Q sign((p * q) % 2 ? -1 : 1);
        EXPECT_EQ(wedge(ap, bq), sign * wedge(bq, ap));
      }
    }
  }
}

TEST(Wedge, AgreesWithOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const MV a = random_form(rng, 11, 4), b = random_form(rng, 11, 4);
    EXPECT_EQ(to_form(wedge(a, b)), oracle::wedge(to_form(a), to_form(b)));
  }
}

TEST(Interior, Examples) {
  const ModelDims dims{2};
  const ContactModel<Q> m(dims);
  const int z1 = FrameLabel::zeta(1).index(dims);
  const MV zeta1 = m.coframe(FrameLabel::zeta(1)), zeta2 = m.coframe(FrameLabel::zeta(2));
  EXPECT_EQ(interior(z1, zeta1), MV::scalar(Q(1)));
  EXPECT_TRUE(interior(z1, zeta2).is_zero());
  EXPECT_EQ(interior(z1, wedge(zeta2, zeta1)), -zeta2);
}

TEST(Interior, AntiderivationPropertiesOnRandomForms) {
  std::mt19937 rng(99);
  const int D = 7;
  for (int trial = 0; trial < 100; ++trial) {
    const MV w = random_form(rng, D, 5);
    for (int v = 0; v < D; ++v) {
      EXPECT_TRUE(interior(v, interior(v, w)).is_zero());
      // {e_v ^ -, i_v} = id
      EXPECT_EQ(wedge(e(v), interior(v, w)) + interior(v, wedge(e(v), w)), w);
      EXPECT_EQ(to_form(interior(v, w)), oracle::interior(v, to_form(w)));
    }
    // Leibniz: i(a ^ b) = i(a) ^ b + (-1)^p a ^ i(b)
    for (int p = 0; p <= 3; ++p) {
      const MV a = homogeneous_part(random_form(rng, D, 6), p);
      const MV b = random_form(rng, D, 3);
      for (int v = 0; v < D; ++v) {
        const Q sign(p % 2 ? -1 : 1);
        EXPECT_EQ(interior(v, wedge(a, b)), wedge(interior(v, a), b) + sign * wedge(a, interior(v, b)));
      }
    }
  }
}

TEST(Hodge, VolumeFormAndInvolution) {
  const ModelDims dims{1};
  EXPECT_EQ(hodge_star(MV::scalar(Q(1)), dims), MV::blade(Blade::from_mask(dims.all_mask())));
  const MV w = wedge(e(0), e(1));
  EXPECT_EQ(hodge_star(hodge_star(w, dims), dims), w);
  EXPECT_THROW(hodge_star(e(0) + wedge(e(1), e(2)), dims), std::invalid_argument);
}

TEST(Hodge, AgreesWithOracleAndSquaresToIdentity) {
  for (int n : {1, 2}) {
    const ModelDims dims{n};
    const auto space = BladeSpace::full(dims);
    for (int k = 0; k <= dims.dim(); ++k) {
      for (Blade b : space->basis(k)) {
        const MV w = MV::blade(b);
        const MV star = hodge_star(w, dims);
        ASSERT_EQ(hodge_star(star, dims), w);
        if (n == 1) ASSERT_EQ(to_form(star), oracle::hodge(to_form(w), dims.dim()));
      }
    }
  }
}

// *(rho ^ *w) = (-1)^{(D-k)(k-1)} i_Y w for every coframe element rho with dual Y.
TEST(Hodge, StarOfWedgeIsContraction) {
  const ModelDims dims{1};
  const int D = dims.dim();
  const auto space = BladeSpace::full(dims);
  for (int k = 1; k <= D; ++k) {
    const Q sign(((D - k) * (k - 1)) % 2 ? -1 : 1);
    for (Blade b : space->basis(k)) {
      const MV w = MV::blade(b);
      for (int rho = 0; rho < D; ++rho) {
        ASSERT_EQ(hodge_star(wedge(e(rho), hodge_star(w, dims)), dims), sign * interior(rho, w))
            << "k=" << k << " rho=" << rho;
      }
    }
  }
}

TEST(Pairing, Examples) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  const auto zeta = m.coframe(FrameLabel::zeta(1));
  const auto X = m.frame_vector(FrameLabel::zeta(1));
  EXPECT_EQ(pairing(zeta, X), Q(1));
  const auto form = wedge(zeta, m.phi_star(1, zeta));
  const auto vec = wedge(X, m.phi(1, X));
  EXPECT_EQ(pairing(form, vec), Q(-1) / 2);
  const auto eta = wedge(m.coframe(FrameLabel::eta(2)), m.coframe(FrameLabel::eta(3)));
  const auto xi = wedge(m.frame_vector(FrameLabel::eta(2)), m.frame_vector(FrameLabel::eta(3)));
  EXPECT_EQ(pairing(eta, xi), Q(1) / 2);
  EXPECT_THROW(pairing(zeta, xi), std::invalid_argument);
}

TEST(Pairing, AgreesWithLeibnizDeterminant) {
  std::mt19937 rng(5);
  const int D = 7;
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<oracle::Vec> covs, vecs;
    MV form = MV::scalar(Q(1));
    KVector<Q> kvec = KVector<Q>::scalar(Q(1));
    for (int i = 0; i < k; ++i) {
      oracle::Vec c, v;
      MV c1;
      KVector<Q> v1;
      for (int j = 0; j < D; ++j) {
        const int a = coeff(rng), b = coeff(rng);
        if (a) { c[j] = a; c1.add(Blade::single(j), Q(a)); }
        if (b) { v[j] = b; v1.add(Blade::single(j), Q(b)); }
      }
      covs.push_back(c);
      vecs.push_back(v);
      form = wedge(form, c1);
      kvec = wedge(kvec, v1);
    }
    if (form.is_zero() || kvec.is_zero()) continue;
    EXPECT_EQ(to_frac(pairing(form, kvec)), oracle::pairing(covs, vecs));
  }
}

TEST(LeadingBlade, LexOrder) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  const auto lead = leading_blade(m.xi_form(1));
  ASSERT_TRUE(lead);
  EXPECT_EQ(*lead, Blade::from_indices({FrameLabel::zeta(1).index(dims), FrameLabel::phi_zeta(1, 1).index(dims)}));
  EXPECT_FALSE(leading_blade(MV{}).has_value());
  const Blade a = Blade::from_indices({FrameLabel::zeta(1).index(dims), dims.eta_index(1)});
  const Blade b = Blade::from_indices({FrameLabel::phi_zeta(1, 1).index(dims), dims.eta_index(1)});
  EXPECT_LT(a, b);
}

TEST(BladeSpace, DimensionsAreBinomial) {
  const ModelDims dims{2};
  const auto full = BladeSpace::full(dims);
  const auto horizontal = BladeSpace::horizontal(dims);
  EXPECT_EQ(full->total_dim(), 2048);
  EXPECT_EQ(horizontal->total_dim(), 256);
  const oracle::Model om(2);
  for (int k = 0; k <= 8; ++k) {
    const auto blades = horizontal->basis(k);
    const auto expected = oracle::subsets(om.horizontal_pool(), k);
    ASSERT_EQ(blades.size(), expected.size());
    for (std::size_t i = 0; i < blades.size(); ++i) EXPECT_EQ(blades[i].indices(), expected[i]);
  }
}

TEST(ModelDims, RangeChecked) {
  EXPECT_THROW(ModelDims::make(-1), std::invalid_argument);
  EXPECT_THROW(ModelDims::make(8), std::invalid_argument);
  EXPECT_EQ(ModelDims::make(0).dim(), 3);
}
