#include <gtest/gtest.h>

#include <random>

#include "eidsobs/error.hpp"
#include "eidsobs/groebner/operations.hpp"
#include "eidsobs/poly/parse.hpp"
#include "oracles.hpp"

namespace eidsobs {
namespace {

Ideal I(const VarContext& ctx, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_poly(g, ctx));
  return Ideal(ctx, std::move(out));
}

const VarContext kXY{"x", "y"};
const VarContext kXYZ{"x", "y", "z"};

TEST(StandardBasis, Coordinates) {
  for (auto ord : {MonomialOrder::global(), MonomialOrder::local()}) {
    StandardBasis sb = standard_basis(I(kXY, {"x", "y"}), ord);
    ASSERT_EQ(sb.basis.size(), 2u);
    EXPECT_EQ(colength(sb), 1u);
  }
}

TEST(StandardBasis, GlobalColengthMatchesEnumeration) {
  StandardBasis sb = standard_basis(I(kXY, {"x^2-y", "y^2"}), MonomialOrder::global());
  std::vector<oracle::Exps> lead;
  for (const auto& m : sb.staircase) lead.push_back({m[0], m[1]});
  EXPECT_EQ(oracle::monomials_outside(lead, 2, 10), 4u);
  EXPECT_EQ(colength(sb), 4u);
}

TEST(StandardBasis, LocalUnitIsInvertible) {
  StandardBasis sb = standard_basis(I(kXY, {"x+x^2", "y"}), MonomialOrder::local());
  ASSERT_EQ(sb.staircase.size(), 2u);
  EXPECT_TRUE((sb.staircase[0] == Monomial{1, 0} && sb.staircase[1] == Monomial{0, 1}) ||
              (sb.staircase[1] == Monomial{1, 0} && sb.staircase[0] == Monomial{0, 1}));
}

TEST(StandardBasis, LocalIgnoresPointsAwayFromOrigin) {
  // (x^2 - x, y): two points globally, one of them at the origin.
  EXPECT_EQ(colength(I(kXY, {"x^2-x", "y"}), MonomialOrder::global()), 2u);
  EXPECT_EQ(colength(I(kXY, {"x^2-x", "y"}), MonomialOrder::local()), 1u);
  EXPECT_EQ(colength(I(kXY, {"x-1", "y"}), MonomialOrder::local()), 0u);
}

TEST(Colength, Examples) {
  EXPECT_EQ(colength(I(kXY, {"x^2", "y^3"}), MonomialOrder::local()), 6u);
  EXPECT_EQ(colength(I(kXYZ, {"x", "y", "z"}), MonomialOrder::local()), 1u);
  EXPECT_EQ(colength(I(kXY, {"3*x^2", "2*y"}), MonomialOrder::local()), 2u);
  EXPECT_EQ(colength(I(kXY, {"x*y"}), MonomialOrder::local()), std::nullopt);
}

TEST(Colength, LocalEqualsGlobalForOriginSupportedIdeals) {
  // Quasi-homogeneous Jacobian ideals: E6, E7, E8, D5 in two variables.
  for (auto gens : {std::vector<const char*>{"3*x^2", "4*y^3"}, {"3*x^2+y^3", "3*x*y^2"},
                    {"3*x^2", "5*y^4"}, {"2*x*y", "x^2+4*y^3"}}) {
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(parse_poly(g, kXY));
    Ideal id(kXY, ps);
    EXPECT_EQ(colength(id, MonomialOrder::local()), colength(id, MonomialOrder::global()));
  }
}

TEST(Colength, IndependentOfGeneratorOrder) {
  Ideal a = I(kXYZ, {"x^2+y*z", "y^2+x*z", "z^2+x*y"});
  Ideal b = I(kXYZ, {"z^2+x*y", "x^2+y*z", "y^2+x*z"});
  auto ca = colength(a, MonomialOrder::local());
  EXPECT_EQ(ca, colength(b, MonomialOrder::local()));
  ASSERT_TRUE(ca);
}

TEST(Property, StaircaseAgainstEnumerationOnRandomMonomialIdeals) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    VarContext ctx(names);
    std::vector<oracle::Exps> gens;
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Exps e(n, 0);
      e[i] = 1 + rng() % 6;
      gens.push_back(e);
    }
    std::size_t extra = rng() % 4;
    for (std::size_t k = 0; k < extra; ++k) {
      oracle::Exps e(n, 0);
      unsigned budget = 1 + rng() % 6;
      for (unsigned b = 0; b < budget; ++b) ++e[rng() % n];
      gens.push_back(e);
    }
    for (const auto& e : gens) {
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
      polys.push_back(Polynomial::monomial(ctx, m));
    }
    Ideal id(ctx, polys);
    std::uint64_t expected = oracle::monomials_outside(gens, n, 7);
    EXPECT_EQ(colength(id, MonomialOrder::local()), expected);
    EXPECT_EQ(colength(id, MonomialOrder::global()), expected);
  }
}

TEST(Buchberger, SPolynomialsReduceToZero) {
  Ideal id = I(kXYZ, {"x^2*y - z^2", "x*y^2 - x", "y*z - x + 1"});
  StandardBasis gb = standard_basis(id, MonomialOrder::global());
  for (std::size_t a = 0; a < gb.basis.size(); ++a)
    for (std::size_t b = a + 1; b < gb.basis.size(); ++b) {
      const Polynomial& f = gb.basis[a];
      const Polynomial& g = gb.basis[b];
      Monomial l = f.leading_monomial().lcm(g.leading_monomial());
      Polynomial s(kXYZ);
      s.sub_mul(-1 / f.leading_coeff(), f.leading_monomial().quotient_of(l), f);
      s.sub_mul(1 / g.leading_coeff(), g.leading_monomial().quotient_of(l), g);
      EXPECT_TRUE(gb.contains(s));
    }
  for (const auto& g : id.generators()) EXPECT_TRUE(gb.contains(g));
}

TEST(Buchberger, UnitIdeal) {
  StandardBasis gb = standard_basis(I(kXY, {"x*y-1", "x"}), MonomialOrder::global());
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(colength(gb), 0u);
}

TEST(Buchberger, ResourceLimitIsReported) {
  Limits tight;
  tight.max_degree = 3;
  EXPECT_THROW(standard_basis(I(kXY, {"x^5-y", "y^3-x"}), MonomialOrder::global(), tight), Error);
}

TEST(Krull, Dimensions) {
  const VarContext six{"a", "b", "c", "d", "e", "f"};
  PolyMatrix m(six, 2, 3);
  for (std::size_t i = 0; i < 6; ++i) m(i / 3, i % 3) = Polynomial::variable(six, i);
  EXPECT_EQ(krull_dimension(minors(m, 2)), 4);
  EXPECT_EQ(krull_dimension(minors(m, 1)), 0);
  EXPECT_EQ(krull_dimension(I(kXYZ, {"x"})), 2);
  EXPECT_THROW(krull_dimension(Ideal::unit(kXY)), Error);
}

TEST(Minors, TwoByThree) {
  const VarContext ctx{"x", "y", "v", "z", "w", "u"};
  PolyMatrix m(ctx, {{parse_poly("x", ctx), parse_poly("y", ctx), parse_poly("v", ctx)},
                     {parse_poly("z", ctx), parse_poly("w", ctx), parse_poly("u", ctx)}});
  Ideal two = minors(m, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two.generators()[0], parse_poly("x*w-y*z", ctx));
  EXPECT_EQ(two.generators()[1], parse_poly("x*u-v*z", ctx));
  EXPECT_EQ(two.generators()[2], parse_poly("y*u-v*w", ctx));
  EXPECT_EQ(minors(m, 1).size(), 6u);
  EXPECT_THROW(minors(m, 3), Error);
}

TEST(Minors, DisplayedSurfaceMatrix) {
  const VarContext ctx{"x", "y", "z", "w"};
  auto p = [&](const char* s) { return parse_poly(s, ctx); };
  PolyMatrix m(ctx, {{p("z"), p("y+w"), p("x")}, {p("w"), p("x"), p("y")}});
  Ideal two = minors(m, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two.generators()[0], p("z*x-w*(y+w)"));
  EXPECT_EQ(two.generators()[1], p("z*y-w*x"));
  EXPECT_EQ(two.generators()[2], p("(y+w)*y-x^2"));
}

TEST(Minors, SmallerMinorsCutLargerLocus) {
  // On points where all 1-minors vanish, 2-minors vanish; sample the locus
  // of a parametrised family.
  const VarContext ctx{"s", "r"};
  auto p = [&](const char* s) { return parse_poly(s, ctx); };
  PolyMatrix m(ctx, {{p("s*r"), p("s^2"), p("s")}, {p("r^2*s"), p("s^3"), p("r*s")}});
  Ideal one = minors(m, 1);
  Ideal two = minors(m, 2);
  for (int k = -3; k <= 3; ++k) {
    std::vector<Rational> pt{0, Rational(k, 2)};
    for (const auto& g : one.generators()) ASSERT_EQ(evaluate(g, pt), 0);
    for (const auto& g : two.generators()) EXPECT_EQ(evaluate(g, pt), 0);
  }
}

TEST(Jacobian, Shapes) {
  PolyMatrix j = jacobian(kXY, {parse_poly("x^2+y", kXY)});
  EXPECT_EQ(j(0, 0), parse_poly("2*x", kXY));
  EXPECT_EQ(j(0, 1), parse_poly("1", kXY));
  PolyMatrix id = jacobian(kXY, {parse_poly("x", kXY), parse_poly("y", kXY)});
  EXPECT_EQ(id(0, 0), parse_poly("1", kXY));
  EXPECT_TRUE(id(0, 1).is_zero());
  PolyMatrix z = jacobian(kXY, {parse_poly("5", kXY)});
  EXPECT_TRUE(z(0, 0).is_zero() && z(0, 1).is_zero());
}

TEST(Operations, Saturation) {
  EXPECT_TRUE(same_ideal(saturation(I(kXY, {"x*y"}), I(kXY, {"x"})), I(kXY, {"y"})));
  Ideal a = I(kXY, {"x^2-y", "y^3"});
  EXPECT_TRUE(same_ideal(saturation(a, Ideal::unit(kXY)), a));
  EXPECT_TRUE(same_ideal(saturation(I(kXY, {"x^2", "x*y"}), I(kXY, {"x"})), Ideal::unit(kXY)));
}

TEST(Operations, QuotientByHand) {
  // (x^2, xy) : x = (x, y) and (x^2, xy) : y = (x).
  EXPECT_TRUE(same_ideal(quotient(I(kXY, {"x^2", "x*y"}), parse_poly("x", kXY)), I(kXY, {"x", "y"})));
  EXPECT_TRUE(same_ideal(quotient(I(kXY, {"x^2", "x*y"}), parse_poly("y", kXY)), I(kXY, {"x"})));
}

TEST(Operations, Intersection) {
  Ideal meet = intersection(I(kXY, {"x"}), I(kXY, {"y"}));
  EXPECT_TRUE(same_ideal(meet, I(kXY, {"x*y"})));
  EXPECT_EQ(divide_exact(parse_poly("x^2-y^2", kXY), parse_poly("x+y", kXY)), parse_poly("x-y", kXY));
  EXPECT_THROW(divide_exact(parse_poly("x^2+y", kXY), parse_poly("x", kXY)), Error);
}

TEST(Hilbert, MultiplicityOfTangentCone) {
  // Cusp: multiplicity 2; node: 2; smooth curve: 1; twisted cubic cone: 3.
  EXPECT_EQ(local_hilbert_samuel(I(kXY, {"x^2-y^3"})).multiplicity, 2);
  EXPECT_EQ(local_hilbert_samuel(I(kXY, {"x^2-y^2+x^3"})).multiplicity, 2);
  EXPECT_EQ(local_hilbert_samuel(I(kXY, {"x-y^2"})).multiplicity, 1);
  const VarContext c4{"x", "y", "z", "w"};
  HilbertData h = local_hilbert_samuel(I(c4, {"x*z-y^2", "x*w-y*z", "y*w-z^2"}));
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.multiplicity, 3);
}

}  // namespace
}  // namespace eidsobs
