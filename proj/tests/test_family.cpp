#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "wcurve/errors.hpp"
#include "wcurve/io.hpp"

using namespace wtest;
using nlohmann::json;

namespace {

const VarsPtr& xyt() {
  static const VarsPtr v = make_vars({"x", "y", "t"});
  return v;
}

UnfoldingFamily family(const std::string& f1, const std::string& f2, const std::string& f3) {
  return make_family({P(f1, xyt()), P(f2, xyt()), P(f3, xyt())});
}

std::string corpus(const std::string& name) { return std::string(WCURVE_CORPUS_DIR) + "/" + name + ".germ"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliRun cli(const std::string& args) {
  CliRun r;
  FILE* pipe = popen((std::string("\"") + WCURVE_CLI + "\" " + args + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("wcurve-test-" + name + ".germ");
  std::ofstream(path) << text;
  return path.string();
}

std::string drop_seed_line(const std::string& s) {
  std::stringstream in(s);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"seed\":") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST(Family, RejectsNonOriginPreserving) {
  EXPECT_THROW(family("x + t", "y^2", "x*y"), PreconditionViolation);
  EXPECT_THROW(make_family({P("x"), P("y^2"), P("x*y")}), DomainError);
}

TEST(Family, SpecializeRecoversBaseAndDeformation) {
  const UnfoldingFamily F = family("x", "y^2", "x*y^3 - x^5*y + t*x^3*y");
  const GermMap g0 = specialize(F, Rational(0));
  EXPECT_EQ(g0.f[2], P("x*y^3 - x^5*y"));
  const GermMap g1 = specialize(F, Rational(1));
  EXPECT_EQ(double_point_curve(g1), local_normalize(P("x*y^2 - x^5 + x^3")));
}

TEST(Family, SpecializeReportsFailures) {
  const UnfoldingFamily F = family("x", "y^2", "y^3 + t*x*y");
  EXPECT_THROW(specialize(F, Rational(0)), PreconditionViolation);
  const UnfoldingFamily G = family("x^2 + t*y^3", "y^2", "x^3 + y^3 + x*y");
  EXPECT_THROW(specialize(G, Rational(1)), UnsupportedGerm);
}

TEST(Verdict, TrivialUnfolding) {
  const VerdictTable t = whitney_verdict(family("x", "y^2", "x*y^3 - x^5*y"), 3, 1);
  EXPECT_EQ(t.verdict, Verdict::EQUISINGULAR_AT_SAMPLES);
  ASSERT_EQ(t.samples.size(), 4u);
  for (const auto& s : t.samples) EXPECT_EQ(s.report.mu_W, 13);
  EXPECT_FALSE(t.failing_invariant.has_value());
  EXPECT_TRUE(t.identity_checks_passed());
}

TEST(Verdict, DeformedCuspidalEdge) {
  const VerdictTable t = whitney_verdict(family("x", "y^2", "x*y^3 - x^5*y + t*x^3*y"), 3, 1);
  EXPECT_EQ(t.verdict, Verdict::NOT_EQUISINGULAR);
  ASSERT_EQ(t.samples.size(), 4u);
  EXPECT_EQ(sgn(t.samples[0].t), 0);
  EXPECT_EQ(t.samples[0].report.mu_W, 13);
  EXPECT_EQ(t.samples[0].report.mu_D, 6);
  for (std::size_t i = 1; i < t.samples.size(); ++i) {
    const auto& r = t.samples[i].report;
    EXPECT_NE(sgn(t.samples[i].t), 0);
    EXPECT_EQ(r.mu_W, 11);
    EXPECT_EQ(r.mu_D, 4);
    EXPECT_EQ(r.m_fD, 2);
    EXPECT_EQ(r.mu_gamma, 0);
  }
  ASSERT_TRUE(t.failing_invariant.has_value());
  EXPECT_EQ(*t.failing_invariant, "mu_D");
  EXPECT_TRUE(t.semicontinuity_violations.empty());
  EXPECT_TRUE(t.identity_checks_passed());
}

TEST(Verdict, LeavingTheSupportedClassIsIndeterminate) {
  const VerdictTable t = whitney_verdict(family("x^2 + t*y^3", "y^2", "x^3 + y^3 + x*y"), 3, 1);
  EXPECT_EQ(t.verdict, Verdict::INDETERMINATE);
  EXPECT_FALSE(t.rejected.empty());
  for (const auto& r : t.rejected) EXPECT_FALSE(r.reason.empty());
}

TEST(Verdict, DeterministicAndSeedInvariant) {
  const UnfoldingFamily F = family("x", "y^2", "x*y^3 - x^5*y + t*x^3*y");
  const VerdictTable a = whitney_verdict(F, 3, 9);
  const VerdictTable b = whitney_verdict(F, 3, 9);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].t, b.samples[i].t);
    EXPECT_EQ(a.samples[i].report.line.coefficients, b.samples[i].report.line.coefficients);
  }
  for (std::uint64_t seed : {2, 3, 4}) EXPECT_EQ(whitney_verdict(F, 3, seed).verdict, Verdict::NOT_EQUISINGULAR);
}

TEST(Verdict, SemicontinuityOnCorpusFamilies) {
  for (const char* name : {"unfold-C5-trivial", "unfold-C5-deformed", "unfold-cross-cap-stable"}) {
    const GermFile file = read_germ_file(corpus(name));
    const VerdictTable t = whitney_verdict(make_family(file.f), 3, 1);
    ASSERT_FALSE(t.samples.empty()) << name;
    const auto& base = t.samples[0].report;
    for (const auto& s : t.samples) {
      EXPECT_LE(s.report.mu_W, base.mu_W) << name;
      EXPECT_LE(s.report.mu_D, base.mu_D) << name;
      EXPECT_LE(s.report.mu_gamma, base.mu_gamma) << name;
    }
    EXPECT_TRUE(t.semicontinuity_violations.empty()) << name;
  }
}

TEST(GermFormat, ParsesGermAndUnfolding) {
  const GermFile g = parse_germ_file("# comment\ngerm\nvars x y\nf1 = x\nf2 = y^2  # fold\nf3 = x*y\n", "cc");
  EXPECT_EQ(g.kind, GermFile::Kind::GERM);
  EXPECT_EQ(g.name, "cc");
  EXPECT_EQ(g.f[2].to_string(), "x*y");
  const GermFile u = parse_germ_file("unfolding\nvars x y t\nf1 = x\nf2 = y^2\nf3 = x*y + t*y^3\n");
  EXPECT_EQ(u.kind, GermFile::Kind::UNFOLDING);
  EXPECT_EQ(u.vars->size(), 3u);
}

TEST(GermFormat, ErrorsCarryLineAndColumn) {
  auto where = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_germ_file(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(where("germ\nvars x y\nf1 = x\nf2 = y^^2\nf3 = x*y\n"), std::make_pair(4, 8));
  EXPECT_EQ(where("germ\nvars x y\nf1 = x\nf2 = y^2\n"), std::make_pair(5, 1));
  EXPECT_EQ(where("curve\n"), std::make_pair(1, 1));
  EXPECT_EQ(where("germ\nvars x y\nf1 x\n").first, 3);
  EXPECT_EQ(where("germ\nvars x y\nf1 = sin(x)\nf2 = y\nf3 = 0\n").first, 3);
}

TEST(Report, JsonFieldsAreExact) {
  const GermFile file = read_germ_file(corpus("C5"));
  const InvariantReport r = invariant_profile(make_germ(file.f), 1);
  const json j = json::parse(report_json(file.name, r, 1));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["germ"]["name"], "C5");
  EXPECT_EQ(j["invariants"]["mu_W"], 13);
  for (const auto& c : j["generic_line"]["coefficients"]) EXPECT_TRUE(c.is_string());
  EXPECT_FALSE(j["generic_line"]["certificate"].empty());
  EXPECT_TRUE(j["checks"].is_array());
}

TEST(Report, VerdictJsonListsSamples) {
  const GermFile file = read_germ_file(corpus("unfold-C5-deformed"));
  const VerdictTable t = whitney_verdict(make_family(file.f), 3, 1);
  const json j = json::parse(verdict_json(file.name, t, 1));
  EXPECT_EQ(j["verdict"], "NOT_EQUISINGULAR");
  EXPECT_EQ(j["failing_invariant"], "mu_D");
  ASSERT_EQ(j["samples"].size(), 4u);
  for (const auto& s : j["samples"]) EXPECT_TRUE(s["t"].is_string());
}

TEST(Cli, AnalyzeMatchesGolden) {
  const CliRun r = cli("analyze \"" + corpus("C5") + "\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(drop_seed_line(r.out), drop_seed_line(slurp(WCURVE_GOLDEN_DIR "/C5.json")));
}

TEST(Cli, ExitCodes) {
  const CliRun parse = cli("analyze \"" + temp_file("bad", "germ\nvars x y\nf1 = x\nf2 = y^^2\nf3 = x*y\n") + "\"");
  EXPECT_EQ(parse.status, 2);
  EXPECT_NE(parse.out.find(":4:8:"), std::string::npos) << parse.out;

  const CliRun unsupported = cli("analyze \"" + temp_file("corank2", "germ\nvars x y\nf1 = x^2\nf2 = x*y\nf3 = y^3\n") + "\"");
  EXPECT_EQ(unsupported.status, 3) << unsupported.out;

  EXPECT_EQ(cli("analyze \"" + corpus("not-fd") + "\"").status, 4);
  EXPECT_EQ(cli("check-fd \"" + corpus("not-fd") + "\"").status, 0);
  EXPECT_EQ(cli("unfold \"" + corpus("unfold-C5-deformed") + "\" --samples 3").status, 0);
  EXPECT_EQ(cli("corpus --filter cross-cap").status, 0);
}

TEST(Cli, CheckFdReportsWitness) {
  const json j = json::parse(cli("check-fd \"" + corpus("not-fd") + "\" --json").out);
  EXPECT_EQ(j["finitely_determined"], false);
  EXPECT_EQ(j["witness"], "y^2");
}
