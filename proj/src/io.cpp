#include "wcurve/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wcurve/errors.hpp"
#include "wcurve/parse.hpp"

namespace wcurve {

using Json = nlohmann::ordered_json;

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::size_t first_nonspace(const std::string& s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

int col(std::size_t idx) { return static_cast<int>(idx) + 1; }

}  // namespace

GermFile parse_germ_file(const std::string& text, const std::string& name) {
  GermFile file;
  file.name = name;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  std::array<bool, 3> seen{false, false, false};
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t start = first_nonspace(line);
    if (start == line.size()) continue;
    std::size_t end = start;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != '=') ++end;
    const std::string word = line.substr(start, end - start);
    if (!have_header) {
      if (word == "germ") {
        file.kind = GermFile::Kind::GERM;
      } else if (word == "unfolding") {
        file.kind = GermFile::Kind::UNFOLDING;
      } else {
        throw ParseError(lineno, col(start), "expected 'germ' or 'unfolding'");
      }
      const std::size_t extra = first_nonspace(line, end);
      if (extra != line.size()) throw ParseError(lineno, col(extra), "unexpected text after header");
      have_header = true;
      continue;
    }
    if (word == "vars") {
      if (file.vars) throw ParseError(lineno, col(start), "duplicate vars line");
      Variables names;
      std::size_t pos = first_nonspace(line, end);
      while (pos < line.size()) {
        std::size_t e = pos;
        while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
        const std::string v = line.substr(pos, e - pos);
        if (!is_identifier(v)) throw ParseError(lineno, col(pos), "invalid variable name '" + v + "'");
        if (std::find(names.begin(), names.end(), v) != names.end())
          throw ParseError(lineno, col(pos), "duplicate variable '" + v + "'");
        names.push_back(v);
        pos = first_nonspace(line, e);
      }
      const std::size_t want = file.kind == GermFile::Kind::GERM ? 2 : 3;
      if (names.size() != want)
        throw ParseError(lineno, col(start), "expected " + std::to_string(want) + " variables, found " +
                                                 std::to_string(names.size()));
      file.vars = make_vars(names);
      continue;
    }
    if (word == "f1" || word == "f2" || word == "f3") {
      if (!file.vars) throw ParseError(lineno, col(start), "component given before the vars line");
      const std::size_t idx = static_cast<std::size_t>(word[1] - '1');
      if (seen[idx]) throw ParseError(lineno, col(start), "duplicate component " + word);
      const std::size_t eq = first_nonspace(line, end);
      if (eq == line.size() || line[eq] != '=') throw ParseError(lineno, col(eq), "expected '='");
      const std::size_t expr = first_nonspace(line, eq + 1);
      if (expr == line.size()) throw ParseError(lineno, col(expr), "missing polynomial");
      file.f[idx] = parse_polynomial(line.substr(expr), file.vars, lineno, static_cast<int>(expr));
      seen[idx] = true;
      continue;
    }
    throw ParseError(lineno, col(start), "unknown directive '" + word + "'");
  }
  if (!have_header) throw ParseError(lineno + 1, 1, "empty germ file");
  if (!file.vars) throw ParseError(lineno + 1, 1, "missing vars line");
  for (std::size_t i = 0; i < 3; ++i)
    if (!seen[i]) throw ParseError(lineno + 1, 1, "missing component f" + std::to_string(i + 1));
  return file;
}

GermFile read_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_germ_file(ss.str(), std::filesystem::path(path).stem().string());
}

namespace {

Json rational_array(const LineCoefficients& l) { return Json::array({to_string(l[0]), to_string(l[1]), to_string(l[2])}); }

Json germ_json(const std::string& name, const GermMap& g) {
  Json j;
  j["name"] = name;
  j["f"] = Json::array({g.f[0].to_string(), g.f[1].to_string(), g.f[2].to_string()});
  j["class"] = to_string(g.input_class);
  j["corank"] = g.corank;
  j["normalization"] = g.normalization;
  j["normal_form"] = Json::array({g.normal[0].to_string(), g.normal[1].to_string(), g.normal[2].to_string()});
  return j;
}

Json invariants_json(const InvariantReport& r) {
  Json j;
  j["mu_D"] = r.mu_D;
  j["mu_gamma"] = r.mu_gamma;
  j["mu_W"] = r.mu_W;
  j["mu_W_formula"] = r.mu_W_formula;
  j["m_D"] = r.m_D;
  j["m_gamma"] = r.m_gamma;
  j["m_fD"] = r.m_fD;
  j["i_D_gamma"] = r.i_D_gamma;
  j["i_D_gamma_branches"] = r.i_D_gamma_branches;
  j["r_i"] = r.r_i;
  j["r_f"] = r.r_f;
  if (r.e_D) j["e_D"] = r.e_D->has_value() ? Json(**r.e_D) : Json("INFINITE");
  return j;
}

Json report_body(const InvariantReport& r) {
  Json j;
  j["double_point_curve"] = r.lambda.to_string();
  j["d_empty"] = r.d_empty;
  Json line;
  line["coefficients"] = rational_array(r.line.coefficients);
  line["certificate"] = r.line.certificate;
  Json rej = Json::array();
  for (const auto& x : r.line.rejected) rej.push_back({{"coefficients", rational_array(x.coefficients)}, {"reason", x.reason}});
  line["rejected"] = rej;
  j["generic_line"] = line;
  j["slice"] = r.slice.to_string();
  if (r.d_empty) {
    j["mu_gamma"] = r.mu_gamma;
    j["m_gamma"] = r.m_gamma;
    return j;
  }
  j["W"] = r.W.to_string();
  j["invariants"] = invariants_json(r);
  if (r.e_D_projection) j["e_D_projection"] = rational_array(*r.e_D_projection);
  j["coefficient_field"] = r.field;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json cj;
    cj["kind"] = to_string(c.kind);
    if (c.partner >= 0) cj["partner"] = c.partner;
    cj["multiplicity"] = c.multiplicity;
    cj["image_multiplicity"] = c.image_multiplicity;
    cj["x"] = c.x;
    cj["y"] = c.y;
    comps.push_back(cj);
  }
  j["components"] = comps;
  j["tangent_cones_disjoint"] = r.tangent_cones_disjoint;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    if (c.status == CheckStatus::NOT_APPLICABLE) {
      cj["note"] = c.note;
    } else {
      cj["lhs"] = c.lhs;
      cj["relation"] = c.relation;
      cj["rhs"] = c.rhs;
    }
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string linear_form(const LineCoefficients& l) {
  QPoly p(make_vars({"X", "Y", "Z"}));
  for (std::uint32_t i = 0; i < 3; ++i) p.add_term(Exponent{i == 0, i == 1, i == 2}, l[i]);
  return p.to_string();
}

std::string check_line(const IdentityCheck& c) {
  if (c.status == CheckStatus::NOT_APPLICABLE) return c.name + "  not applicable (" + c.note + ")";
  return c.name + "  " + std::to_string(c.lhs) + " " + c.relation + " " + std::to_string(c.rhs) + "  " +
         to_string(c.status);
}

}  // namespace

std::string report_json(const std::string& name, const InvariantReport& r, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "analyze";
  j["seed"] = seed;
  j["germ"] = germ_json(name, r.germ);
  const Json body = report_body(r);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

std::string report_text(const std::string& name, const InvariantReport& r, std::uint64_t seed) {
  std::ostringstream os;
  const auto& g = r.germ;
  os << "germ " << name << ": f = (" << g.f[0].to_string() << ", " << g.f[1].to_string() << ", " << g.f[2].to_string()
     << ")\n";
  os << "class " << to_string(g.input_class) << ", corank " << g.corank << "\n";
  if (!g.normalization.empty())
    os << "normal form (" << g.normalization << "): (" << g.normal[0].to_string() << ", " << g.normal[1].to_string()
       << ", " << g.normal[2].to_string() << ")\n";
  os << "seed " << seed << ", plane l = " << linear_form(r.line.coefficients) << " (" << r.line.rejected.size()
     << " rejected draws)\n";
  for (const auto& c : r.line.certificate) os << "  certified: " << c << "\n";
  if (r.d_empty) {
    os << "D(f) is empty: no double points, W invariants not defined\n";
    os << "slice preimage " << r.slice.to_string() << ": mu = " << r.mu_gamma << ", m = " << r.m_gamma << "\n";
    return os.str();
  }
  os << "D(f)   = V(" << r.lambda.to_string() << ")\n";
  os << "gamma~ = V(" << r.slice.to_string() << ")\n";
  os << "mu(D) = " << r.mu_D << "  mu(gamma~) = " << r.mu_gamma << "  mu(W) = " << r.mu_W << "\n";
  os << "m(D) = " << r.m_D << "  m(gamma~) = " << r.m_gamma << "  m(f(D)) = " << r.m_fD << "\n";
  os << "i(D, gamma~) = " << r.i_D_gamma << "  r_i = " << r.r_i << "  r_f = " << r.r_f << "\n";
  if (r.e_D) os << "e_D = " << to_string(*r.e_D) << "\n";
  os << "components over " << r.field << ":\n";
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& c = r.components[k];
    os << "  [" << k << "] " << to_string(c.kind);
    if (c.partner >= 0) os << " with [" << c.partner << "]";
    os << ", m = " << c.multiplicity << ", image multiplicity " << c.image_multiplicity << ": x = " << c.x
       << ", y = " << c.y << "\n";
  }
  os << "checks:\n";
  for (const auto& c : r.checks) os << "  " << check_line(c) << "\n";
  return os.str();
}

std::string verdict_json(const std::string& name, const VerdictTable& t, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "unfold";
  j["seed"] = seed;
  j["family"] = name;
  j["verdict"] = to_string(t.verdict);
  j["evidence"] = "sampled parameter values";
  j["failing_invariant"] = t.failing_invariant ? Json(*t.failing_invariant) : Json(nullptr);
  Json samples = Json::array();
  for (const auto& s : t.samples) {
    Json sj;
    sj["t"] = to_string(s.t);
    sj["germ"] = germ_json(name + "@t=" + to_string(s.t), s.report.germ);
    const Json body = report_body(s.report);
    for (auto it = body.begin(); it != body.end(); ++it) sj[it.key()] = it.value();
    samples.push_back(sj);
  }
  j["samples"] = samples;
  Json rej = Json::array();
  for (const auto& r : t.rejected) rej.push_back({{"t", to_string(r.t)}, {"reason", r.reason}});
  j["rejected_samples"] = rej;
  j["semicontinuity_violations"] = t.semicontinuity_violations;
  return j.dump(2) + "\n";
}

std::string verdict_text(const std::string& name, const VerdictTable& t, std::uint64_t seed) {
  std::ostringstream os;
  os << "unfolding " << name << ", seed " << seed << "\n";
  os << "      t   mu(W) = mu(D) + mu(gamma~) + 4*m(f(D)) - 1\n";
  for (const auto& s : t.samples) {
    const auto& r = s.report;
    std::string tv = to_string(s.t);
    os << std::string(tv.size() < 7 ? 7 - tv.size() : 0, ' ') << tv << "   " << r.mu_W << " = " << r.mu_D << " + "
       << r.mu_gamma << " + 4*" << r.m_fD << " - 1";
    if (!r.all_passed()) os << "   identity check FAILED";
    os << "\n";
  }
  for (const auto& r : t.rejected) os << "rejected " << r.reason << "\n";
  for (const auto& v : t.semicontinuity_violations) os << "semicontinuity violation: " << v << "\n";
  os << "verdict: " << to_string(t.verdict);
  if (t.failing_invariant) os << " (" << *t.failing_invariant << " changes)";
  os << "\n";
  if (t.verdict == Verdict::EQUISINGULAR_AT_SAMPLES) os << "mu(W) is constant at the sampled parameters\n";
  return os.str();
}

std::string fd_json(const std::string& name, const GermMap& g, const FdVerdict& v) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "check-fd";
  j["germ"] = germ_json(name, g);
  j["double_point_curve"] = v.lambda.to_string();
  j["d_empty"] = v.empty;
  j["finitely_determined"] = v.finitely_determined;
  j["mu_D"] = v.mu ? Json(*v.mu) : Json("INFINITE");
  j["witness"] = v.finitely_determined ? Json("mu(D) = " + std::to_string(*v.mu)) : Json(v.lambda.to_string());
  if (v.repeated) j["repeated_factor"] = v.repeated->to_string();
  return j.dump(2) + "\n";
}

std::string fd_text(const std::string& name, const GermMap& g, const FdVerdict& v) {
  std::ostringstream os;
  os << "germ " << name << " (" << to_string(g.input_class) << ")\n";
  if (v.empty) {
    os << "D(f) is empty; finitely determined\n";
    return os.str();
  }
  os << "D(f) = V(" << v.lambda.to_string() << ")\n";
  if (v.finitely_determined) {
    os << "finitely determined: yes, mu(D) = " << *v.mu << "\n";
  } else {
    os << "finitely determined: no, D(f) is not reduced";
    if (v.repeated) os << " (repeated factor " << v.repeated->to_string() << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace wcurve
