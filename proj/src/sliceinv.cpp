#include "wcurve/sliceinv.hpp"

#include <random>

#include "wcurve/errors.hpp"

namespace wcurve {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS:
      return "PASS";
    case CheckStatus::FAIL:
      return "FAIL";
    case CheckStatus::NOT_APPLICABLE:
      return "NOT_APPLICABLE";
  }
  return "?";
}

bool InvariantReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::FAIL) return false;
  return true;
}

const IdentityCheck* InvariantReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr int kMaxDraws = 500;

LineCoefficients draw(std::mt19937_64& rng) {
  for (;;) {
    LineCoefficients l;
    for (auto& c : l) c = static_cast<int>(rng() % 19) - 9;
    if (sgn(l[0]) != 0 || sgn(l[1]) != 0 || sgn(l[2]) != 0) return l;
  }
}

long order_of(const std::array<QPoly, 3>& f) {
  long m = -1;
  for (const auto& p : f)
    if (!p.is_zero() && (m < 0 || p.order() < m)) m = p.order();
  return m;
}

// Rethrows an error from one stage of the pipeline with the stage name attached.
template <class Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  const std::string prefix = std::string(name) + ": ";
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const UnsupportedGerm& e) {
    throw UnsupportedGerm(prefix + e.what());
  } catch (const PreconditionViolation& e) {
    throw PreconditionViolation(prefix + e.what());
  } catch (const IdentityFailure& e) {
    throw IdentityFailure(prefix + e.what());
  } catch (const PrecisionExhausted& e) {
    throw PrecisionExhausted(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  }
}

IdentityCheck make_check(std::string name, long lhs, const std::string& rel, long rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.relation = rel;
  c.lhs = lhs;
  c.rhs = rhs;
  const bool ok = rel == "=" ? lhs == rhs : lhs <= rhs;
  c.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
  return c;
}

IdentityCheck not_applicable(std::string name, std::string note) {
  IdentityCheck c;
  c.name = std::move(name);
  c.status = CheckStatus::NOT_APPLICABLE;
  c.note = std::move(note);
  return c;
}

std::string head_terms(const KSeries& s, int n) {
  if (s.is_exact() && static_cast<int>(s.coeffs().size()) <= n) return s.to_string();
  return s.truncated(n).to_string();
}

}  // namespace

std::optional<std::string> line_defect(const GermMap& g, const DoublePointData& dp, const LineCoefficients& l,
                                       std::vector<std::string>* certificate) {
  if (sgn(l[0]) == 0 && sgn(l[1]) == 0 && sgn(l[2]) == 0) return "zero linear form";
  std::vector<std::string> cert;
  for (std::size_t k = 0; k < dp.components.size(); ++k) {
    const auto& t = dp.components[k].image.tangent;
    AlgebraicNumber v(0);
    for (std::size_t i = 0; i < 3; ++i) v += AlgebraicNumber(l[i]) * t[i];
    if (v.is_zero()) return "vanishes on the tangent direction of image branch " + std::to_string(k + 1);
  }
  cert.push_back("l(v) != 0 for all " + std::to_string(dp.components.size()) + " image branch tangent directions");
  const QPoly s = source_slice(g, l);
  if (s.is_zero()) return "l o f vanishes identically";
  if (!squarefree_part(s).is_squarefree) return "l o f is not reduced";
  cert.push_back("l o f is reduced");
  const long generic = order_of(g.normal);
  if (s.order() != generic)
    return "order of l o f is " + std::to_string(s.order()) + ", generic order is " + std::to_string(generic);
  cert.push_back("order(l o f) = " + std::to_string(generic) + " is the generic order");
  if (sgn(gcd(s, dp.lambda).constant_term()) == 0) return "l o f shares a component with D(f)";
  cert.push_back("l o f and lambda share no component");
  if (certificate) *certificate = std::move(cert);
  return std::nullopt;
}

GenericLine choose_generic_line(const GermMap& g, const DoublePointData& dp, std::uint64_t seed) {
  GenericLine line;
  line.seed = seed;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < kMaxDraws; ++n) {
    const LineCoefficients l = draw(rng);
    const auto defect = line_defect(g, dp, l, &line.certificate);
    if (!defect) {
      line.coefficients = l;
      return line;
    }
    line.rejected.push_back({l, *defect});
  }
  throw PreconditionViolation("no generic plane found after " + std::to_string(kMaxDraws) + " draws");
}

QPoly source_slice(const GermMap& g, const LineCoefficients& l) {
  QPoly s(g.vars());
  for (std::size_t i = 0; i < 3; ++i) s += QPoly::constant(g.vars(), l[i]) * g.normal[i];
  return s;
}

QPoly W_curve(const QPoly& lambda, const QPoly& slice) {
  if (sgn(gcd(lambda, slice).constant_term()) == 0)
    throw PreconditionViolation("slice preimage shares a component with D(f)");
  return lambda * slice;
}

ExtNat e_D(const GermMap& g, const DoublePointData& dp, std::uint64_t seed, LineCoefficients* projection) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const QPoly& lambda = dp.lambda;
  for (int n = 0; n < kMaxDraws; ++n) {
    const LineCoefficients p = draw(rng);
    if (line_defect(g, dp, p)) continue;
    const QPoly pf = source_slice(g, p);
    const QPoly jac = lambda.derivative(0) * pf.derivative(1) - lambda.derivative(1) * pf.derivative(0);
    const ExtNat v = colength({{lambda, jac}}).value;
    if (!v) continue;
    if (projection) *projection = p;
    return v;
  }
  throw PreconditionViolation("no generic projection with finite e_D found");
}

InvariantReport invariant_profile(const GermMap& g, std::uint64_t seed, bool with_e_D) {
  InvariantReport r;
  r.germ = g;
  if (g.input_class == GermClass::UNSUPPORTED)
    throw UnsupportedGerm(g.reason.empty() ? "unsupported germ class" : g.reason);
  const FdVerdict fd = stage("double point curve", [&] { return is_finitely_determined(g); });
  if (!fd.finitely_determined) {
    std::string why = "germ is not finitely determined: D(f) = V(" + fd.lambda.to_string() + ")";
    if (fd.repeated) why += " has repeated factor " + fd.repeated->to_string();
    throw PreconditionViolation(why);
  }
  r.lambda = fd.lambda;
  r.d_empty = fd.empty;
  const DoublePointData dp = stage("component classification", [&] { return classify_components(g, r.lambda); });
  r.line = stage("generic plane", [&] { return choose_generic_line(g, dp, seed); });
  r.slice = source_slice(g, r.line.coefficients);
  r.m_gamma = r.slice.order();
  r.mu_gamma = stage("slice Milnor number", [&] { return *milnor_number(r.slice); });
  if (r.d_empty) return r;

  r.mu_D = *fd.mu;
  r.m_D = r.lambda.order();
  r.m_fD = dp.image_multiplicity_total;
  r.r_i = dp.r_i;
  r.r_f = dp.r_f;
  if (dp.field) r.field = dp.field->describe();
  for (const auto& c : dp.components) {
    ComponentSummary s;
    s.kind = c.kind;
    s.partner = c.partner;
    s.multiplicity = c.branch.multiplicity;
    s.image_multiplicity = c.image_multiplicity;
    s.x = head_terms(c.branch.x, 8);
    s.y = head_terms(c.branch.y, 8);
    r.components.push_back(std::move(s));
  }
  r.W = stage("W curve", [&] { return W_curve(r.lambda, r.slice); });
  r.mu_W = stage("Milnor number of W", [&] { return *milnor_number(r.W); });
  r.mu_W_formula = r.mu_D + r.mu_gamma + 4 * r.m_fD - 1;
  r.i_D_gamma = stage("intersection", [&] { return *intersection_multiplicity(r.lambda, r.slice); });
  r.i_D_gamma_branches = stage("branch intersection", [&] {
    long sum = 0;
    for (const auto& c : dp.components) {
      KSeries s({}, KSeries::kExact);
      for (std::size_t i = 0; i < 3; ++i) s = s + AlgebraicNumber(r.line.coefficients[i]) * c.image.composite[i];
      sum += s.valuation();
    }
    return sum;
  });
  r.tangent_cones_disjoint = gcd(r.lambda.lowest_form(), r.slice.lowest_form()).is_constant();

  r.checks.push_back(make_check("LEMMA_A", r.i_D_gamma, "=", 2 * r.m_fD));
  r.checks.push_back(make_check("LEMMA_B", r.m_D * r.m_gamma, "<=", 2 * r.m_fD));
  r.checks.push_back(make_check("LEMMA_C", r.mu_W, "=", r.mu_W_formula));
  r.checks.push_back(make_check("BRANCH_SUM", r.i_D_gamma, "=", r.i_D_gamma_branches));
  if (g.input_class == GermClass::DOUBLE_FOLD)
    r.checks.push_back(make_check("COR_DOUBLE_FOLD", r.m_D, "=", r.m_fD));
  else
    r.checks.push_back(not_applicable("COR_DOUBLE_FOLD", "germ is not a double fold"));
  if (r.tangent_cones_disjoint)
    r.checks.push_back(make_check("COR_TRANSVERSAL", 2 * r.m_fD, "=", r.m_D * r.m_gamma));
  else
    r.checks.push_back(not_applicable("COR_TRANSVERSAL", "D(f) and the slice preimage share a tangent line"));

  if (with_e_D) {
    LineCoefficients p;
    r.e_D = stage("e_D", [&] { return e_D(g, dp, seed, &p); });
    r.e_D_projection = p;
  }
  return r;
}

}  // namespace wcurve
