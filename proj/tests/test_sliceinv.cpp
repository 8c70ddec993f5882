#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "wcurve/errors.hpp"
#include "wcurve/io.hpp"
#include "wcurve/puiseux.hpp"
#include "wcurve/sliceinv.hpp"

using namespace wtest;

namespace {

GermMap germ(const std::string& f1, const std::string& f2, const std::string& f3) {
  return make_germ({P(f1), P(f2), P(f3)});
}

DoublePointData data_of(const GermMap& g) { return classify_components(g, double_point_curve(g)); }

LineCoefficients L(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

std::vector<GermFile> fd_corpus() {
  std::vector<GermFile> out;
  for (const auto& entry : std::filesystem::directory_iterator(WCURVE_CORPUS_DIR)) {
    if (entry.path().extension() != ".germ") continue;
    GermFile file = read_germ_file(entry.path().string());
    if (file.kind != GermFile::Kind::GERM) continue;
    const GermMap g = make_germ(file.f);
    if (g.input_class == GermClass::UNSUPPORTED) continue;
    const FdVerdict v = is_finitely_determined(g);
    if (!v.finitely_determined || v.empty) continue;
    out.push_back(std::move(file));
  }
  std::sort(out.begin(), out.end(), [](const GermFile& a, const GermFile& b) { return a.name < b.name; });
  return out;
}

long colength_or(const std::vector<QPoly>& gens) {
  const auto v = brute_colength(gens, 60);
  return v ? *v : -1;
}

}  // namespace

TEST(GenericLine, TangentAvoidance) {
  const GermMap g = germ("x", "y^2", "x*y^3 - x^5*y");
  const DoublePointData dp = data_of(g);
  const auto bad = line_defect(g, dp, L(1, 0, 0));
  ASSERT_TRUE(bad.has_value());
  EXPECT_NE(bad->find("tangent"), std::string::npos) << *bad;
  std::vector<std::string> certificate;
  EXPECT_FALSE(line_defect(g, dp, L(1, 1, 0), &certificate).has_value());
  EXPECT_FALSE(certificate.empty());
}

TEST(GenericLine, NonReducedSlice) {
  const GermMap g = germ("x", "y^2", "x*y");
  const auto bad = line_defect(g, data_of(g), L(0, 1, 0));
  ASSERT_TRUE(bad.has_value());
  EXPECT_NE(bad->find("reduced"), std::string::npos) << *bad;
}

TEST(GenericLine, DeterministicAndCertified) {
  const GermMap g = germ("x", "y^2", "x*y^3 - x^5*y");
  const DoublePointData dp = data_of(g);
  const GenericLine a = choose_generic_line(g, dp, 5);
  const GenericLine b = choose_generic_line(g, dp, 5);
  EXPECT_EQ(a.coefficients, b.coefficients);
  EXPECT_EQ(a.rejected.size(), b.rejected.size());
  EXPECT_FALSE(a.certificate.empty());
  EXPECT_FALSE(line_defect(g, dp, a.coefficients).has_value());
  for (const auto& r : a.rejected) EXPECT_TRUE(line_defect(g, dp, r.coefficients).has_value());
}

TEST(Slice, Composition) {
  EXPECT_EQ(source_slice(germ("x", "y^2", "x*y^3 - x^5*y"), L(1, 1, 0)), P("x + y^2"));
  EXPECT_EQ(source_slice(germ("x", "y^2", "x*y"), L(1, 1, 0)), P("x + y^2"));
  EXPECT_EQ(source_slice(germ("x", "y^2", "x*y"), L(0, 0, 1)), P("x*y"));
}

TEST(Slice, WCurveIsProduct) {
  EXPECT_EQ(W_curve(P("x*y^2 - x^5"), P("x + y^2")), P("(x*y^2 - x^5)*(x + y^2)"));
  EXPECT_EQ(W_curve(P("x"), P("x + y^2")), P("x^2 + x*y^2"));
}

TEST(Slice, CommonComponentRejected) {
  const GermMap g = germ("x", "y^2", "x*y");
  EXPECT_THROW(W_curve(double_point_curve(g), source_slice(g, L(0, 0, 1))), PreconditionViolation);
}

TEST(Profile, CuspidalEdgeGerm) {
  const InvariantReport r = invariant_profile(germ("x", "y^2", "x*y^3 - x^5*y"), 1);
  EXPECT_EQ(r.mu_D, 6);
  EXPECT_EQ(r.mu_gamma, 0);
  EXPECT_EQ(r.m_D, 3);
  EXPECT_EQ(r.m_gamma, 1);
  EXPECT_EQ(r.m_fD, 2);
  EXPECT_EQ(r.i_D_gamma, 4);
  EXPECT_EQ(r.mu_W, 13);
  EXPECT_EQ(r.mu_W_formula, 13);
  EXPECT_EQ(r.r_i, 2);
  EXPECT_EQ(r.r_f, 1);
  EXPECT_FALSE(r.tangent_cones_disjoint);
  EXPECT_EQ(r.check("COR_TRANSVERSAL")->status, CheckStatus::NOT_APPLICABLE);
  EXPECT_EQ(r.check("COR_DOUBLE_FOLD")->status, CheckStatus::NOT_APPLICABLE);
  for (const char* name : {"LEMMA_A", "LEMMA_B", "LEMMA_C"}) EXPECT_EQ(r.check(name)->status, CheckStatus::PASS) << name;
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.mu_W, colength_or({r.W.derivative(0), r.W.derivative(1)}));
}

TEST(Profile, CrossCap) {
  const InvariantReport r = invariant_profile(germ("x", "y^2", "x*y"), 1);
  EXPECT_EQ(r.mu_D, 0);
  EXPECT_EQ(r.mu_gamma, 0);
  EXPECT_EQ(r.m_fD, 1);
  EXPECT_EQ(r.i_D_gamma, 2);
  EXPECT_EQ(r.mu_W, 3);
  EXPECT_TRUE(r.all_passed());
}

TEST(Profile, ImmersionHasEmptyDoublePointCurve) {
  const InvariantReport r = invariant_profile(germ("x", "y", "0"), 1);
  EXPECT_TRUE(r.d_empty);
  EXPECT_TRUE(r.components.empty());
}

TEST(Profile, RejectsNonFinitelyDetermined) {
  EXPECT_THROW(invariant_profile(germ("x", "y^2", "y^3"), 1), PreconditionViolation);
}

TEST(EDInvariant, CrossCapAndStability) {
  const GermMap cc = germ("x", "y^2", "x*y");
  EXPECT_EQ(e_D(cc, data_of(cc), 1), ExtNat(1));

  const GermMap c5 = germ("x", "y^2", "x*y^3 - x^5*y");
  const DoublePointData dp = data_of(c5);
  std::set<std::vector<std::string>> projections;
  std::set<long> values;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    LineCoefficients p;
    const ExtNat v = e_D(c5, dp, seed, &p);
    ASSERT_TRUE(v.has_value());
    values.insert(*v);
    projections.insert({p[0].get_str(), p[1].get_str(), p[2].get_str()});
    const QPoly pf = source_slice(c5, p);
    const QPoly jac = dp.lambda.derivative(0) * pf.derivative(1) - dp.lambda.derivative(1) * pf.derivative(0);
    EXPECT_EQ(v, brute_colength({dp.lambda, jac}, 60));
  }
  EXPECT_EQ(values.size(), 1u);
  EXPECT_EQ(projections.size(), 3u);
}

TEST(CorpusProperties, IdentitiesAndOracles) {
  const auto corpus = fd_corpus();
  ASSERT_GE(corpus.size(), 10u);
  for (const auto& file : corpus) {
    const GermMap g = make_germ(file.f);
    std::optional<InvariantReport> first;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const InvariantReport r = invariant_profile(g, seed);
      SCOPED_TRACE(file.name + " seed " + std::to_string(seed));
      for (const auto& c : r.checks) EXPECT_NE(c.status, CheckStatus::FAIL) << c.name;
      EXPECT_EQ(r.check("LEMMA_A")->status, CheckStatus::PASS);
      EXPECT_EQ(r.check("LEMMA_C")->status, CheckStatus::PASS);
      EXPECT_EQ(r.i_D_gamma, r.i_D_gamma_branches);
      EXPECT_EQ(r.slice.order(), g.input_class == GermClass::DOUBLE_FOLD ? 2 : 1);
      if (g.input_class == GermClass::DOUBLE_FOLD) EXPECT_EQ(r.check("COR_DOUBLE_FOLD")->status, CheckStatus::PASS);
      if (r.tangent_cones_disjoint) EXPECT_EQ(r.check("COR_TRANSVERSAL")->status, CheckStatus::PASS);
      if (!first) {
        first = r;
        EXPECT_EQ(r.i_D_gamma, colength_or({r.lambda, r.slice}));
        EXPECT_EQ(r.mu_D, colength_or({r.lambda.derivative(0), r.lambda.derivative(1)}));
        continue;
      }
      EXPECT_EQ(r.mu_D, first->mu_D);
      EXPECT_EQ(r.mu_gamma, first->mu_gamma);
      EXPECT_EQ(r.mu_W, first->mu_W);
      EXPECT_EQ(r.i_D_gamma, first->i_D_gamma);
      EXPECT_EQ(r.m_fD, first->m_fD);
    }
  }
}
