#include <gtest/gtest.h>

#include "eidsobs/error.hpp"
#include "eidsobs/obstruction/obstruction.hpp"
#include "germs.hpp"
#include "oracles.hpp"

namespace eidsobs {

TEST(GenericLink, ExhaustiveAgainstBinomial) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t t = 1; t <= m; ++t) {
        long long sign = t % 2 == 0 ? 1 : -1;
        EXPECT_EQ(chi_bar_generic_link(m, n, t), sign * oracle::binomial(m - 1, t - 1)) << m << n << t;
      }
  EXPECT_EQ(chi_bar_generic_link(2, 3, 2), 1);
  EXPECT_THROW(chi_bar_generic_link(3, 2, 1), Error);
  EXPECT_THROW(chi_bar_generic_link(2, 3, 0), Error);
}

TEST(GenericLink, ComplexLinkOfStratum) {
  // Normal type of V_1 in a (2,3,2) germ is the cone M^2_{2,3}.
  EXPECT_EQ(complex_link_chi(germs::corank1_c8(), 1), 2);
  EXPECT_THROW(complex_link_chi(germs::corank1_c8(), 2), Error);
}

TEST(Formulas, Values) {
  EXPECT_EQ(eu_smoothable(2, 1, 3), -1);
  EXPECT_EQ(eu_smoothable(0, 0, 0), 1);
  EXPECT_EQ(eu_n_equals_6(1), 2);
  EXPECT_EQ(eu_n_ge_7(8, 1, 1), 2);
  EXPECT_EQ(chi_tilde_corank1(8, 1), -1);
  EXPECT_EQ(eu_three_strata(1, 1, 2, -1), 0);
  EXPECT_THROW(eu_n_ge_7(6, 0, 0), Error);
  EXPECT_THROW(chi_tilde_corank1(5, 0), Error);
  EXPECT_EQ(lefschetz_combine({{0, 3, 1, {}, {}}, {1, -1, 2, {}, {}}}), 1);
}

TEST(Formulas, SignCancellation) {
  for (std::size_t N = 7; N <= 12; ++N)
    for (long long mu = 0; mu <= 10; ++mu) {
      long long chi = (N % 2 == 0 ? 1 : -1) * mu;  // (-1)^(N-2) mu
      EXPECT_EQ(eu_n_ge_7(N, mu, chi), 2) << N << " " << mu;
    }
}

TEST(Formulas, ThreeStrataReducesToNGe7) {
  // chi(L_V1) = 2 for (2,3,2); the singular slice has dimension N - 7.
  for (std::size_t N = 7; N <= 10; ++N)
    for (long long mu = 0; mu <= 4; ++mu)
      for (long long chi = -3; chi <= 3; ++chi)
        EXPECT_EQ(eu_three_strata(static_cast<int>(N) - 7, mu, 2, chi), eu_n_ge_7(N, mu, chi));
}

TEST(Regime, Names) {
  for (Regime r : {Regime::Smoothable, Regime::NEquals6, Regime::NGe7Type232, Regime::Corank1FastPath,
                   Regime::GeneralThreeStrata})
    EXPECT_EQ(regime_from_string(to_string(r)), r);
  EXPECT_THROW(regime_from_string("nope"), Error);
}

TEST(Supplied, Lookup) {
  SuppliedInputs s;
  s.add(InvariantName::ChiTilde, "slice", 4);
  ASSERT_NE(s.find(InvariantName::ChiTilde, "slice"), nullptr);
  EXPECT_EQ(s.find(InvariantName::ChiTilde, "slice")->value, 4);
  EXPECT_EQ(s.find(InvariantName::ChiTilde, "slice")->provenance.kind, Provenance::Kind::Supplied);
  EXPECT_EQ(s.find(InvariantName::Mu, "slice"), nullptr);
}

TEST(Eu, CubicCone) {
  EuResult r = eu_dispatch(germs::cubic_cone(), 0);
  EXPECT_EQ(r.value, -1);
  EXPECT_EQ(r.regime, Regime::Smoothable);
  for (const auto& in : r.inputs) EXPECT_EQ(in.provenance.kind, Provenance::Kind::Computed);
}

TEST(Eu, RegimeCoherenceOnSurface) {
  auto x = germs::cubic_cone();
  EXPECT_EQ(eu_for_regime(x, Regime::GeneralThreeStrata, 0).value, eu_for_regime(x, Regime::Smoothable, 0).value);
}

TEST(Eu, CorankOneRoutesAgree) {
  auto x = germs::corank1_c8();
  EXPECT_TRUE(corank1_applicable(x));
  EXPECT_EQ(residual_milnor(x), 1u);
  EuResult fast = eu_for_regime(x, Regime::Corank1FastPath, 0);
  EuResult general = eu_for_regime(x, Regime::NGe7Type232, 0);
  EuResult three = eu_for_regime(x, Regime::GeneralThreeStrata, 0);
  EXPECT_EQ(fast.value, 2);
  EXPECT_EQ(general.value, 2);
  EXPECT_EQ(three.value, 2);
  EXPECT_EQ(eu_corank1_fastpath(x, 0), 2);
}

TEST(Eu, FourfoldInC6) {
  EuResult r = eu_dispatch(germs::c6_fourfold(), 0);
  EXPECT_EQ(r.regime, Regime::NEquals6);
  EXPECT_EQ(r.value, 2);
}

TEST(Eu, RegimeMismatch) {
  try {
    eu_for_regime(germs::cubic_cone(), Regime::NGe7Type232, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RegimeMismatch);
  }
  EXPECT_FALSE(corank1_applicable(germs::cubic_cone()));
}

TEST(Eu, PreferredSuppliedValue) {
  SuppliedInputs s;
  s.add(InvariantName::ChiTilde, "slice", 5, Provenance::corpus("R1"));
  s.prefer = true;
  EuResult r = eu_for_regime(germs::c6_fourfold(), Regime::NEquals6, 0, s);
  EXPECT_EQ(r.value, 6);
  bool seen = false;
  for (const auto& in : r.inputs)
    if (in.name == InvariantName::ChiTilde) {
      seen = true;
      EXPECT_EQ(in.provenance.kind, Provenance::Kind::Corpus);
      EXPECT_EQ(in.provenance.row, "R1");
    }
  EXPECT_TRUE(seen);
}

TEST(Eu, ResourceLimitWithoutSuppliedValue) {
  Limits tight = Limits{}.with_work_budget(1);
  try {
    eu_dispatch(germs::c6_fourfold(), 0, {}, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
}

TEST(Property, SmoothPointNormalization) {
  for (std::size_t N : {4u, 5u, 6u, 7u, 8u}) {
    auto x = germs::smooth(N);
    auto regimes = applicable_regimes(x);
    EXPECT_FALSE(regimes.empty()) << N;
    for (Regime r : regimes) EXPECT_EQ(eu_for_regime(x, r, 0).value, 1) << N << " " << to_string(r);
    EXPECT_EQ(eu_dispatch(x, 0).value, 1) << N;
  }
}

}  // namespace eidsobs
