#include "cosym/contact_model.hpp"
#include "cosym/verify_identities.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cosym;
using testing_support::to_form;
using testing_support::to_frac;
using testing_support::to_vec;
using Q = Rational;
using MV = Multivector<Q>;

class ContactModelTest : public ::testing::TestWithParam<int> {};

TEST(ContactModel, PhiStarExamples) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  const MV zeta = m.coframe(FrameLabel::zeta(1));
  EXPECT_EQ(m.phi_star(1, zeta), m.coframe(FrameLabel::phi_zeta(1, 1)));
  EXPECT_EQ(m.phi_star(1, m.phi_star(2, zeta)), -m.phi_star(3, zeta));
  EXPECT_EQ(m.phi_star(2, m.phi_star(1, zeta)), m.phi_star(3, zeta));
  // eta_3 o phi_2 = eps(3,2,1) eta_1
  EXPECT_EQ(m.phi_star(2, m.coframe(FrameLabel::eta(3))), -m.coframe(FrameLabel::eta(1)));
  EXPECT_TRUE(m.phi_star(2, m.coframe(FrameLabel::eta(2))).is_zero());
  EXPECT_THROW(m.phi_star(1, wedge(zeta, zeta + m.coframe(FrameLabel::eta(1)))), std::invalid_argument);
  EXPECT_THROW(m.xi_form(4), std::out_of_range);
}

TEST_P(ContactModelTest, TableMatchesQuaternionOracle) {
  const ModelDims dims{GetParam()};
  const ContactModel<Q> m(dims);
  const oracle::Model om(dims.n);
  for (int a = 1; a <= 3; ++a) {
    for (int i = 0; i < dims.dim(); ++i) {
      EXPECT_EQ(to_form(m.phi_star(a, MV::basis(i))), om.phi_star_form(a, oracle::basis(i))) << "a=" << a << " i=" << i;
    }
  }
}

TEST_P(ContactModelTest, CompositionLaws) {
  const ModelDims dims{GetParam()};
  const ContactModel<Q> m(dims);
  for (int s = 1; s <= dims.n; ++s) {
    const MV zeta = m.coframe(FrameLabel::zeta(s));
    for (int a = 1; a <= 3; ++a) {
      const int b = cyclic_next(a), c = cyclic_next(b);
      for (int u = 0; u < 4; ++u) {
        const MV x = u == 0 ? zeta : m.coframe(FrameLabel::phi_zeta(u, s));
        EXPECT_EQ(m.phi_star(a, m.phi_star(a, x)), -x);
        EXPECT_EQ(m.phi_star(a, m.phi_star(b, x)), -m.phi_star(c, x));
        EXPECT_EQ(m.phi_star(b, m.phi_star(a, x)), m.phi_star(c, x));
      }
    }
  }
}

// i_{phi_a X_s} phi*_a zeta_t = -delta_st
TEST_P(ContactModelTest, PhiFramePairing) {
  const ModelDims dims{GetParam()};
  const ContactModel<Q> m(dims);
  for (int a = 1; a <= 3; ++a) {
    for (int s = 1; s <= dims.n; ++s) {
      for (int t = 1; t <= dims.n; ++t) {
        const MV value = interior(m.frame_vector(FrameLabel::phi_zeta(a, s)), m.coframe(FrameLabel::phi_zeta(a, t)));
        EXPECT_EQ(value, MV::scalar(Q(s == t ? -1 : 0)));
      }
    }
  }
}

TEST(ContactModel, FundamentalFormExamples) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  const auto Phi1 = m.fundamental_form(1);
  auto V = [&](const FrameLabel& l) { return m.frame_vector(l); };
  EXPECT_EQ(pairing(Phi1, wedge(V(FrameLabel::zeta(1)), V(FrameLabel::phi_zeta(1, 1)))), Q(-1));
  EXPECT_EQ(pairing(Phi1, wedge(V(FrameLabel::zeta(1)), V(FrameLabel::phi_zeta(2, 1)))), Q(0));
  EXPECT_EQ(pairing(Phi1, wedge(V(FrameLabel::phi_zeta(2, 1)), V(FrameLabel::phi_zeta(3, 1)))), Q(-1));
  EXPECT_EQ(pairing(Phi1, wedge(V(FrameLabel::eta(2)), V(FrameLabel::eta(3)))), Q(-1));
}

TEST_P(ContactModelTest, FundamentalFormTableAgainstOracle) {
  const ModelDims dims{GetParam()};
  const ContactModel<Q> m(dims);
  const oracle::Model om(dims.n);
  std::vector<oracle::Vec> frame;
  for (int i = 0; i < dims.dim(); ++i) frame.push_back(to_vec(m.frame_vector(FrameLabel::from_index(dims, i))));
  for (int a = 1; a <= 3; ++a) {
    const auto Phi = m.fundamental_form(a);
    EXPECT_EQ(to_form(Phi), om.Phi(a));
    for (int i = 0; i < dims.dim(); ++i) {
      for (int j = i + 1; j < dims.dim(); ++j) {
        const Q value = pairing(Phi, wedge(m.frame_vector(FrameLabel::from_index(dims, i)),
                                           m.frame_vector(FrameLabel::from_index(dims, j))));
        EXPECT_EQ(to_frac(value), oracle::pairing2(om.Phi(a), frame[i], frame[j]));
      }
    }
    // <Phi_a, X ^ phi_a X> = <Phi_a, phi_b X ^ phi_c X> = <Phi_a, xi_b ^ xi_c> = -1
    const int b = a % 3 + 1;
    const int c = b % 3 + 1;
    const oracle::Frac minus_one(-1);
    for (int s = 1; s <= dims.n; ++s) {
      EXPECT_EQ(oracle::pairing2(om.Phi(a), om.X(s), om.phiX(a, s)), minus_one);
      EXPECT_EQ(oracle::pairing2(om.Phi(a), om.phiX(b, s), om.phiX(c, s)), minus_one);
    }
    EXPECT_EQ(oracle::pairing2(om.Phi(a), om.xi(b), om.xi(c)), minus_one);
  }
  EXPECT_TRUE(check_fundamental_form_table(m).passed);
}

TEST_P(ContactModelTest, XiDefinitionsAgreeAndAreHorizontal) {
  const ModelDims dims{GetParam()};
  const ContactModel<Q> m(dims);
  const oracle::Model om(dims.n);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_EQ(m.xi_form(a), m.xi_form_from_fundamental(a));
    EXPECT_EQ(to_form(m.xi_form(a)), om.Xi(a));
    const MV xi = m.xi_form(a);
    for (const auto& [blade, c] : xi.terms()) {
      EXPECT_EQ(blade.mask() & ~dims.horizontal_mask(), 0u);
    }
    for (int mu = 1; mu <= 3; ++mu) {
      EXPECT_TRUE(interior(m.frame_vector(FrameLabel::eta(mu)), m.xi_form(a)).is_zero());
    }
  }
}

TEST(ContactModel, XiExplicitForRankOne) {
  const ModelDims dims{1};
  const ContactModel<Q> m(dims);
  auto c = [&](const FrameLabel& l) { return m.coframe(l); };
  const MV expected = wedge(c(FrameLabel::zeta(1)), c(FrameLabel::phi_zeta(1, 1))) -
                      wedge(c(FrameLabel::phi_zeta(2, 1)), c(FrameLabel::phi_zeta(3, 1)));
  EXPECT_EQ(m.xi_form(1), expected);
}

TEST_P(ContactModelTest, StructureRelationsHold) {
  const ContactModel<Q> m(ModelDims{GetParam()});
  EXPECT_TRUE(check_structure_relations(m).passed);
}

TEST(ContactModel, EverySingleSignFlipBreaksStructureRelations) {
  const ModelDims dims{1};
  const auto table = PhiStarTable::standard(dims);
  for (int a = 1; a <= 3; ++a) {
    for (int i = 0; i < dims.dim(); ++i) {
      if (table.at(a, i).sign == 0) continue;
      const auto report = check_structure_relations(ContactModel<Q>(table.with_sign_flip(a, i)));
      EXPECT_FALSE(report.passed) << "a=" << a << " i=" << i;
      EXPECT_TRUE(report.witness.has_value());
    }
  }
}

TEST(FrameLabel, IndexBijection) {
  for (int n : {0, 1, 2, 3}) {
    const ModelDims dims{n};
    for (int i = 0; i < dims.dim(); ++i) EXPECT_EQ(FrameLabel::from_index(dims, i).index(dims), i);
    EXPECT_THROW(FrameLabel::from_index(dims, dims.dim()), std::out_of_range);
  }
  EXPECT_EQ(FrameLabel::phi_zeta(2, 1).name(), "phi2*zeta1");
  EXPECT_EQ(levi_civita(1, 2, 3), 1);
  EXPECT_EQ(levi_civita(2, 1, 3), -1);
  EXPECT_EQ(levi_civita(1, 1, 3), 0);
}

INSTANTIATE_TEST_SUITE_P(Ranks, ContactModelTest, ::testing::Values(1, 2));
