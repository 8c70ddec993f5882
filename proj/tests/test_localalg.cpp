#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wcurve/localalg.hpp"

using namespace wtest;

namespace {

bool contains(const std::vector<Exponent>& v, Exponent e) { return std::find(v.begin(), v.end(), e) != v.end(); }

// Leading monomial under the local degree ordering.
Exponent local_leading(const QPoly& p) {
  Exponent best;
  for (const auto& [e, c] : p.terms()) {
    if (best.empty()) {
      best = e;
      continue;
    }
    const int d = static_cast<int>(e[0] + e[1]), db = static_cast<int>(best[0] + best[1]);
    if (d < db || (d == db && e[0] > best[0])) best = e;
  }
  return best;
}

}  // namespace

TEST(StandardBasis, JacobianIdealOfC5DoublePointCurve) {
  const auto sb = standard_basis({{P("y^2 - 5x^4"), P("2xy")}});
  std::vector<Exponent> lead;
  for (const auto& g : sb) lead.push_back(local_leading(g));
  EXPECT_TRUE(contains(lead, {0, 2}));
  EXPECT_TRUE(contains(lead, {1, 1}));
  EXPECT_TRUE(contains(lead, {5, 0}));
}

TEST(StandardBasis, TrivialCases) {
  EXPECT_EQ(standard_basis({{P("x"), P("y")}}).size(), 2u);
  const auto sb = standard_basis({{P("x + y^2")}});
  ASSERT_EQ(sb.size(), 1u);
  EXPECT_EQ(sb[0], P("x + y^2"));
}

TEST(Colength, Examples) {
  const auto r = colength({{P("y^2 - 5x^4"), P("2xy")}});
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 6);
  for (Exponent e : {Exponent{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 1}})
    EXPECT_TRUE(contains(r.standard_monomials, e));
  EXPECT_EQ(colength({{P("x"), P("y")}}).value, 1);
  EXPECT_TRUE(colength({{P("y^2")}}).is_infinite());
  EXPECT_EQ(colength({{P("1 + x"), P("y")}}).value, 0);
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_number(P("x*y^2 - x^5")), 6);
  EXPECT_EQ(milnor_number(P("x + y^2")), 0);
  EXPECT_EQ(milnor_number(P("(x*y^2 - x^5)*(x + y^2)")), 13);
  EXPECT_FALSE(milnor_number(P("y^2")).has_value());
  EXPECT_THROW(milnor_number(P("1 + x")), DomainError);
}

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection_multiplicity(P("x"), P("y")), 1);
  EXPECT_EQ(intersection_multiplicity(P("x^2 - y"), P("x^2 + y")), 2);
  EXPECT_EQ(intersection_multiplicity(P("x*y^2 - x^5"), P("x + y^2")), 4);
  EXPECT_FALSE(intersection_multiplicity(P("x*y"), P("x*(x + y)")).has_value());
}

TEST(Colength, AgreesWithLinearAlgebraOracle) {
  std::mt19937_64 rng(7);
  int finite = 0;
  for (int it = 0; it < 40; ++it) {
    const QPoly a = random_poly(rng, xy(), 4, 4, 4, 1), b = random_poly(rng, xy(), 4, 4, 4, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const auto ours = colength({{a, b}}).value;
    const auto brute = brute_colength({a, b}, 30);
    if (brute) {
      ++finite;
      EXPECT_EQ(ours, brute) << a.to_string() << " , " << b.to_string();
    } else {
      EXPECT_FALSE(ours.has_value() && *ours < 30) << a.to_string() << " , " << b.to_string();
    }
  }
  EXPECT_GT(finite, 20);
}

TEST(Colength, MilnorNumbersOfCurvesAgreeWithOracle) {
  for (const char* g : {"x*y^2 - x^5", "x^2 - y^3", "x^3 + y^4", "(x*y^2 - x^5)*(x + y^2)", "x^2 + y^4",
                        "y*(x^2 - y^3)*(x + 2*y^2)", "x^3 - y^5 + x^2*y^2"}) {
    const QPoly p = P(g);
    EXPECT_EQ(milnor_number(p), brute_colength({p.derivative(0), p.derivative(1)})) << g;
  }
}

TEST(Colength, PresentationIndependent) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    const QPoly a = random_poly(rng, xy(), 4, 4, 4, 1), b = random_poly(rng, xy(), 4, 4, 4, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const QPoly m = random_poly(rng, xy(), 2, 3, 3);
    // (a, b) -> (a + m b, 3 b): unimodular over the local ring.
    EXPECT_EQ(colength({{a, b}}).value, colength({{a + m * b, Rational(3) * b}}).value);
  }
}

TEST(Intersection, SymmetricAdditiveAndBoundedBelow) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    const QPoly g1 = random_poly(rng, xy(), 3, 3, 4, 1), g2 = random_poly(rng, xy(), 3, 3, 4, 1);
    const QPoly h = random_poly(rng, xy(), 3, 3, 4, 1);
    if (g1.is_zero() || g2.is_zero() || h.is_zero()) continue;
    const auto a = intersection_multiplicity(g1, h), b = intersection_multiplicity(g2, h);
    const auto ab = intersection_multiplicity(g1 * g2, h);
    EXPECT_EQ(a, intersection_multiplicity(h, g1));
    if (a && b) {
      EXPECT_EQ(ab, *a + *b);
      EXPECT_GE(*a, g1.order() * h.order());
    } else {
      EXPECT_FALSE(ab.has_value());
    }
  }
}
