#include "wcurve/family.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "wcurve/errors.hpp"

namespace wcurve {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EQUISINGULAR_AT_SAMPLES:
      return "EQUISINGULAR_AT_SAMPLES";
    case Verdict::NOT_EQUISINGULAR:
      return "NOT_EQUISINGULAR";
    case Verdict::INDETERMINATE:
      return "INDETERMINATE";
  }
  return "?";
}

bool VerdictTable::identity_checks_passed() const {
  for (const auto& s : samples)
    if (!s.report.all_passed()) return false;
  return true;
}

UnfoldingFamily make_family(std::array<QPoly, 3> F) {
  VarsPtr vars;
  for (const auto& p : F)
    if (p.vars()) vars = p.vars();
  if (!vars || vars->size() != 3) throw DomainError("unfolding must be given in three variables (x, y, t)");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!F[i].vars()) F[i] = QPoly(vars);
    const QPoly at_origin = F[i].evaluate(0, Rational(0)).evaluate(1, Rational(0));
    if (!at_origin.is_zero())
      throw PreconditionViolation("unfolding is not origin preserving: F" + std::to_string(i + 1) + "(0,0,t) = " +
                                  at_origin.to_string());
  }
  UnfoldingFamily fam;
  fam.F = F;
  fam.source_vars = make_vars({(*vars)[0], (*vars)[1]});
  return fam;
}

GermMap specialize(const UnfoldingFamily& fam, const Rational& t0) {
  std::array<QPoly, 3> f;
  for (std::size_t i = 0; i < 3; ++i) {
    const QPoly p = fam.F[i].evaluate(2, t0);
    QPoly q(fam.source_vars);
    for (const auto& [e, c] : p.terms()) q.add_term(Exponent{e[0], e[1]}, c);
    f[i] = q;
  }
  GermMap g = make_germ(f);
  if (g.input_class == GermClass::UNSUPPORTED) throw UnsupportedGerm("t = " + to_string(t0) + ": " + g.reason);
  const FdVerdict fd = is_finitely_determined(g);
  if (!fd.finitely_determined)
    throw PreconditionViolation("t = " + to_string(t0) + ": not finitely determined, D(f) = V(" +
                                fd.lambda.to_string() + ")");
  return g;
}

namespace {

Rational draw_t(std::mt19937_64& rng) {
  for (;;) {
    const long p = static_cast<long>(rng() % 19) - 9;
    const long q = static_cast<long>(rng() % 9) + 1;
    if (p == 0) continue;
    Rational t(p, q);
    t.canonicalize();
    return t;
  }
}

}  // namespace

VerdictTable whitney_verdict(const UnfoldingFamily& fam, int sample_count, std::uint64_t seed) {
  VerdictTable table;
  const GermMap base = specialize(fam, Rational(0));
  table.samples.push_back({Rational(0), invariant_profile(base, seed)});

  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  std::set<Rational> seen;
  std::vector<Sample> rest;
  const int budget = 4 * sample_count + 8;
  for (int n = 0; n < budget && static_cast<int>(rest.size()) < sample_count; ++n) {
    const Rational t = draw_t(rng);
    if (!seen.insert(t).second) continue;
    try {
      const GermMap g = specialize(fam, t);
      rest.push_back({t, invariant_profile(g, seed)});
    } catch (const UnsupportedGerm& e) {
      table.rejected.push_back({t, e.what()});
    } catch (const PreconditionViolation& e) {
      table.rejected.push_back({t, e.what()});
    }
  }
  std::sort(rest.begin(), rest.end(), [](const Sample& a, const Sample& b) { return a.t < b.t; });
  for (auto& s : rest) table.samples.push_back(std::move(s));

  const InvariantReport& r0 = table.samples.front().report;
  for (std::size_t k = 1; k < table.samples.size(); ++k) {
    const InvariantReport& r = table.samples[k].report;
    const std::string at = "t = " + to_string(table.samples[k].t);
    if (r.mu_W > r0.mu_W) table.semicontinuity_violations.push_back(at + ": mu_W exceeds its value at t = 0");
    if (r.mu_D > r0.mu_D) table.semicontinuity_violations.push_back(at + ": mu_D exceeds its value at t = 0");
    if (r.mu_gamma > r0.mu_gamma)
      table.semicontinuity_violations.push_back(at + ": mu_gamma exceeds its value at t = 0");
  }
  if (table.samples.size() < 2) {
    table.verdict = Verdict::INDETERMINATE;
    return table;
  }
  bool constant = true;
  for (const auto& s : table.samples)
    if (s.report.mu_W != r0.mu_W) constant = false;
  if (constant) {
    table.verdict = Verdict::EQUISINGULAR_AT_SAMPLES;
    return table;
  }
  table.verdict = Verdict::NOT_EQUISINGULAR;
  for (const auto& s : table.samples) {
    const auto& r = s.report;
    if (r.mu_D != r0.mu_D) {
      table.failing_invariant = "mu_D";
    } else if (r.mu_gamma != r0.mu_gamma) {
      table.failing_invariant = "mu_gamma";
    } else if (r.m_fD != r0.m_fD) {
      table.failing_invariant = "m_fD";
    } else {
      continue;
    }
    break;
  }
  return table;
}

}  // namespace wcurve
