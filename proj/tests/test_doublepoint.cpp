#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wcurve/doublepoint.hpp"
#include "wcurve/errors.hpp"

using namespace wtest;

namespace {

GermMap germ(const std::string& f1, const std::string& f2, const std::string& f3) {
  return make_germ({P(f1), P(f2), P(f3)});
}

const VarsPtr& xyxy() {
  static const VarsPtr v = doubled_context(xy());
  return v;
}

QPoly P4(const std::string& s) { return P(s, xyxy()); }

// Equal up to a nonzero rational factor.
bool proportional(const QPoly& a, const QPoly& b) { return primitive_part(a) == primitive_part(b) || primitive_part(a) == -primitive_part(b); }

// Random map through the origin with small integer coefficients.
std::array<QPoly, 3> random_map(std::mt19937_64& rng) {
  std::array<QPoly, 3> f;
  for (auto& c : f) c = random_poly(rng, xy(), 5, 4, 4, 1);
  return f;
}

}  // namespace

TEST(DividedDifferences, FoldComponent) {
  const DividedDifferences dd = divided_differences(std::array<QPoly, 3>{P("x"), P("y^2"), P("x*y^3 - x^5*y")});
  EXPECT_EQ(dd.alpha[1][1], P4("y + y'"));
  EXPECT_EQ(dd.alpha[1][0], P4("0"));
}

TEST(DividedDifferences, LinearComponent) {
  const DividedDifferences dd = divided_differences(std::array<QPoly, 3>{P("x"), P("y^2"), P("x*y")});
  EXPECT_EQ(dd.alpha[0][0], P4("1"));
  EXPECT_EQ(dd.alpha[0][1], P4("0"));
}

TEST(DividedDifferences, ThirdComponentOnDiagonalSlice) {
  const DividedDifferences dd = divided_differences(std::array<QPoly, 3>{P("x"), P("y^2"), P("x*y^3 - x^5*y")});
  const QPoly on_slice = dd.alpha[2][1].substitute(2, QPoly::variable(xyxy(), 0));
  EXPECT_EQ(on_slice, P4("x*(y^2 + y*y' + y'^2) - x^5"));
}

TEST(DividedDifferences, IdentityOnRandomMaps) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_map(rng);
    const DividedDifferences dd = divided_differences(f);
    const QPoly dx = P4("x - x'"), dy = P4("y - y'");
    for (std::size_t i = 0; i < 3; ++i) {
      const QPoly a = f[i].in_context(xyxy());
      const QPoly b = a.substitute(0, P4("x'")).substitute(1, P4("y'"));
      EXPECT_EQ(a - b, dd.alpha[i][0] * dx + dd.alpha[i][1] * dy);
    }
  }
}

TEST(LiftingIdeal, CuspidalEdgeSliceContainsAntidiagonal) {
  const auto gens = lifting_ideal(germ("x", "y^2", "x*y^3 - x^5*y"));
  ASSERT_EQ(gens.size(), 6u);
  // On x' = x every generator is a multiple of y + y' or of the third divided difference.
  const QPoly yy = P4("y + y'");
  const QPoly x = QPoly::variable(xyxy(), 0);
  EXPECT_TRUE(divides(yy, gens[1].substitute(2, x)));
  EXPECT_EQ(gens[3].substitute(2, x), yy);
}

TEST(LiftingIdeal, CrossCap) {
  const auto gens = lifting_ideal(germ("x", "y^2", "x*y"));
  const QPoly x = QPoly::variable(xyxy(), 0);
  std::vector<QPoly> slice;
  for (const auto& g : gens) slice.push_back(g.substitute(2, x));
  EXPECT_TRUE(slice[0].is_zero());
  EXPECT_EQ(slice[1], P4("y^2 - y'^2"));
  EXPECT_EQ(slice[3], P4("y + y'"));
  EXPECT_EQ(slice[4], P4("x"));
}

TEST(LiftingIdeal, ImmersionHasUnitMinor) {
  const auto gens = lifting_ideal(germ("x", "y", "0"));
  EXPECT_EQ(gens[3], P4("1"));
}

TEST(DoublePointCurve, CuspidalEdgeFamily) {
  EXPECT_EQ(double_point_curve(germ("x", "y^2", "x*y^3 - x^5*y")), P("x*y^2 - x^5"));
  EXPECT_EQ(double_point_curve(germ("x", "y^2", "x*y")), P("x"));
  EXPECT_EQ(double_point_curve(germ("x", "y^2", "y^3 + x^2*y")), P("y^2 + x^2"));
}

TEST(DoublePointCurve, NonReducedCurve) {
  EXPECT_EQ(double_point_curve(germ("x", "y^2", "y^3")), P("y^2"));
}

TEST(DoublePointCurve, ImmersionIsEmpty) {
  const QPoly l = double_point_curve(germ("x", "y", "0"));
  EXPECT_TRUE(l.is_constant());
  EXPECT_FALSE(l.is_zero());
}

TEST(DoublePointCurve, RotatedInputMatchesNormalForm) {
  const GermMap g = germ("x + y + y^2", "y^2", "2*x + 2*y + y^3 + x^2*y");
  EXPECT_EQ(g.input_class, GermClass::CORANK1);
  EXPECT_FALSE(g.normalization.empty());
  const auto v = is_finitely_determined(g);
  ASSERT_TRUE(v.finitely_determined);
  EXPECT_EQ(v.mu, ExtNat(1));
}

TEST(DoublePointCurve, DoubleFoldFormulaMatchesElimination) {
  for (const std::string h : {"x^3 + y^3 + x*y", "x^5 + y^5 + x*y"}) {
    const GermMap g = germ("x^2", "y^2", h);
    ASSERT_EQ(g.input_class, GermClass::DOUBLE_FOLD);
    const QPoly eliminated = double_fold_by_elimination(lifting_ideal(g), xy());
    EXPECT_TRUE(proportional(double_point_curve(g), local_normalize(eliminated))) << h;
  }
}

TEST(DoublePointCurve, DoubleFoldFormulaMatchesEliminationOnRandomMaps) {
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const QPoly h = random_poly(rng, xy(), 5, 5, 4, 2);
    const GermMap g = make_germ({P("x^2"), P("y^2"), h});
    if (g.input_class != GermClass::DOUBLE_FOLD) continue;
    QPoly lambda;
    try {
      lambda = double_point_curve(g);
    } catch (const PreconditionViolation&) {
      continue;
    }
    const QPoly eliminated = double_fold_by_elimination(lifting_ideal(g), xy());
    EXPECT_TRUE(proportional(lambda, local_normalize(eliminated))) << h.to_string();
    ++tested;
  }
  EXPECT_GT(tested, 20);
}

TEST(DoublePointCurve, UnsupportedCorankTwo) {
  const GermMap g = germ("x^2", "x*y", "y^3");
  EXPECT_EQ(g.input_class, GermClass::UNSUPPORTED);
  EXPECT_THROW(double_point_curve(g), UnsupportedGerm);
}

TEST(DoublePointCurve, NotGenericallyOneToOne) {
  EXPECT_THROW(double_point_curve(germ("x", "y^2", "y^4")), PreconditionViolation);
}

TEST(FiniteDeterminacy, Verdicts) {
  const auto c5 = is_finitely_determined(germ("x", "y^2", "x*y^3 - x^5*y"));
  EXPECT_TRUE(c5.finitely_determined);
  EXPECT_EQ(c5.mu, ExtNat(6));
  EXPECT_EQ(c5.mu, brute_colength({c5.lambda.derivative(0), c5.lambda.derivative(1)}));

  const auto bad = is_finitely_determined(germ("x", "y^2", "y^3"));
  EXPECT_FALSE(bad.finitely_determined);
  ASSERT_TRUE(bad.repeated.has_value());
  EXPECT_EQ(*bad.repeated, P("y"));

  const auto imm = is_finitely_determined(germ("x", "y", "0"));
  EXPECT_TRUE(imm.finitely_determined);
  EXPECT_TRUE(imm.empty);
}

TEST(Components, CuspidalEdgeHasOnePairAndOneFold) {
  const GermMap g = germ("x", "y^2", "x*y^3 - x^5*y");
  const auto data = classify_components(g, double_point_curve(g));
  ASSERT_EQ(data.components.size(), 3u);
  EXPECT_EQ(data.r_i, 2);
  EXPECT_EQ(data.r_f, 1);
  EXPECT_EQ(data.image_multiplicity_total, 2);
  int folds = 0;
  for (std::size_t i = 0; i < data.components.size(); ++i) {
    const auto& c = data.components[i];
    if (c.kind == ComponentKind::FOLD) {
      ++folds;
      EXPECT_TRUE(c.branch.vertical());
      EXPECT_EQ(c.partner, -1);
    } else {
      ASSERT_GE(c.partner, 0);
      EXPECT_EQ(data.components[static_cast<std::size_t>(c.partner)].partner, static_cast<int>(i));
      EXPECT_EQ(c.image_multiplicity, 1);
    }
  }
  EXPECT_EQ(folds, 1);
}

TEST(Components, CrossCapIsOneFold) {
  const GermMap g = germ("x", "y^2", "x*y");
  const auto data = classify_components(g, double_point_curve(g));
  ASSERT_EQ(data.components.size(), 1u);
  EXPECT_EQ(data.components[0].kind, ComponentKind::FOLD);
  EXPECT_EQ(data.image_multiplicity_total, 1);
}

TEST(Components, StructureIsConsistent) {
  const std::vector<std::array<std::string, 3>> corpus = {
      {"x", "y^3", "x*y + y^5"}, {"x", "y^2", "x^2*y + y^5"}, {"x", "y^2", "x*y^3 + x^3*y"}, {"x^2", "y^2", "x^3 + y^3 + x*y"}};
  for (const auto& f : corpus) {
    const GermMap g = germ(f[0], f[1], f[2]);
    const auto data = classify_components(g, double_point_curve(g));
    long total = 0;
    for (std::size_t i = 0; i < data.components.size(); ++i) {
      const auto& c = data.components[i];
      if (c.kind == ComponentKind::FOLD) {
        EXPECT_EQ(2 * c.image_multiplicity, c.image.order) << f[2];
        total += c.image_multiplicity;
      } else {
        const auto& p = data.components[static_cast<std::size_t>(c.partner)];
        EXPECT_EQ(p.partner, static_cast<int>(i)) << f[2];
        EXPECT_EQ(p.image_multiplicity, c.image_multiplicity) << f[2];
        if (static_cast<int>(i) < c.partner) total += c.image_multiplicity;
      }
    }
    EXPECT_EQ(total, data.image_multiplicity_total) << f[2];
    EXPECT_EQ(data.r_i + data.r_f, static_cast<int>(data.components.size())) << f[2];
  }
}
