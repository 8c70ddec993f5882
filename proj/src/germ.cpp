#include "wcurve/germ.hpp"

#include <map>
#include <optional>

#include "wcurve/errors.hpp"

namespace wcurve {

std::string to_string(GermClass c) {
  switch (c) {
    case GermClass::IMMERSION:
      return "IMMERSION";
    case GermClass::CORANK1:
      return "CORANK1";
    case GermClass::DOUBLE_FOLD:
      return "DOUBLE_FOLD";
    case GermClass::UNSUPPORTED:
      return "UNSUPPORTED";
  }
  return "?";
}

namespace {

using Vec3 = std::array<Rational, 3>;

// Linear part (coefficients of x, y).
std::array<Rational, 2> linear_part(const QPoly& p) {
  return {p.coeff(Exponent{1, 0}), p.coeff(Exponent{0, 1})};
}

QPoly nonlinear_part(const QPoly& p) {
  QPoly r(p.vars());
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] >= 2) r.add_term(e, c);
  return r;
}

// Basis of {c : sum c_i v_i = 0} where v_i are the nonlinear parts.
std::vector<Vec3> nullspace(const std::array<QPoly, 3>& f) {
  std::map<Exponent, std::size_t> row_of;
  std::vector<Vec3> rows;
  for (int i = 0; i < 3; ++i) {
    const QPoly nl = nonlinear_part(f[static_cast<std::size_t>(i)]);
    for (const auto& [e, c] : nl.terms()) {
      auto [it, fresh] = row_of.emplace(e, rows.size());
      if (fresh) rows.push_back({Rational(0), Rational(0), Rational(0)});
      rows[it->second][static_cast<std::size_t>(i)] = c;
    }
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < 3 && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][static_cast<std::size_t>(col)]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = Rational(1) / rows[r][static_cast<std::size_t>(col)];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || sgn(rows[k][static_cast<std::size_t>(col)]) == 0) continue;
      const Rational m = rows[k][static_cast<std::size_t>(col)];
      for (std::size_t j = 0; j < 3; ++j) rows[k][j] -= m * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<Vec3> basis;
  for (int free = 0; free < 3; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    Vec3 v{Rational(0), Rational(0), Rational(0)};
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[static_cast<std::size_t>(pivot_col[k])] = -rows[k][static_cast<std::size_t>(free)];
    basis.push_back(v);
  }
  return basis;
}

std::string vec_string(const Vec3& c, const char* names) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (sgn(c[static_cast<std::size_t>(i)]) == 0) continue;
    if (!s.empty()) s += sgn(c[static_cast<std::size_t>(i)]) > 0 ? " + " : " - ";
    else if (sgn(c[static_cast<std::size_t>(i)]) < 0) s += "-";
    const std::string mag = to_string(abs(c[static_cast<std::size_t>(i)]));
    if (mag != "1") s += mag + "*";
    s += names[i];
  }
  return s;
}

void normalize_corank1(GermMap& g) {
  const auto& f = g.f;
  std::optional<Vec3> comb;
  for (int i = 0; i < 3 && !comb; ++i) {
    const auto l = linear_part(f[static_cast<std::size_t>(i)]);
    if (nonlinear_part(f[static_cast<std::size_t>(i)]).is_zero() && (sgn(l[0]) != 0 || sgn(l[1]) != 0)) {
      Vec3 v{Rational(0), Rational(0), Rational(0)};
      v[static_cast<std::size_t>(i)] = 1;
      comb = v;
    }
  }
  if (!comb) {
    for (const auto& v : nullspace(f)) {
      Rational a = 0, b = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto l = linear_part(f[i]);
        a += v[i] * l[0];
        b += v[i] * l[1];
      }
      if (sgn(a) != 0 || sgn(b) != 0) {
        comb = v;
        break;
      }
    }
  }
  if (!comb) {
    g.input_class = GermClass::UNSUPPORTED;
    g.reason = "corank 1 germ without a component that is linear after a linear change of target coordinates";
    return;
  }
  const Vec3 c = *comb;
  Rational a = 0, b = 0;
  QPoly lead(g.vars());
  for (std::size_t i = 0; i < 3; ++i) {
    const auto l = linear_part(f[i]);
    a += c[i] * l[0];
    b += c[i] * l[1];
    lead += QPoly::constant(g.vars(), c[i]) * f[i];
  }
  // Source change: X = a*x + b*y.
  const QPoly X = QPoly::variable(g.vars(), 0), Y = QPoly::variable(g.vars(), 1);
  QPoly xs, ys;
  std::string source;
  const auto& names = *g.vars();
  if (sgn(a) != 0) {
    xs = QPoly::constant(g.vars(), Rational(1) / a) * (X - QPoly::constant(g.vars(), b) * Y);
    ys = Y;
    if (!(a == 1 && sgn(b) == 0)) source = names[0] + " -> " + xs.to_string();
  } else {
    xs = Y;
    ys = QPoly::constant(g.vars(), Rational(1) / b) * X;
    source = names[0] + " -> " + xs.to_string() + ", " + names[1] + " -> " + ys.to_string();
  }
  auto change = [&](const QPoly& p) {
    QPoly r(g.vars());
    const VarsPtr tmp = make_vars({names[0], names[1], "_X", "_Y"});
    QPoly q = p.in_context(tmp);
    q = q.substitute(0, xs.in_context(tmp).substitute(0, QPoly::variable(tmp, 2)).substitute(1, QPoly::variable(tmp, 3)));
    q = q.substitute(1, ys.in_context(tmp).substitute(0, QPoly::variable(tmp, 2)).substitute(1, QPoly::variable(tmp, 3)));
    for (const auto& [e, co] : q.terms()) r.add_term(Exponent{e[2], e[3]}, co);
    return r;
  };
  // Target: first coordinate is the combination, the other two are the
  // remaining original components minus multiples of it.
  std::size_t drop = 0;
  while (sgn(c[drop]) == 0) ++drop;
  g.normal[0] = change(lead);
  std::size_t k = 1;
  std::string target;
  const char tnames[] = {'X', 'Y', 'Z'};
  const std::string combo = vec_string(c, "XYZ");
  if (combo != std::string(1, tnames[0])) target = "X' = " + combo;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == drop) continue;
    QPoly p = change(f[i]);
    const Rational m = p.coeff(Exponent{1, 0});
    p -= QPoly::constant(g.vars(), m) * g.normal[0];
    g.normal[k] = p;
    std::string t = std::string(1, tnames[i]);
    if (sgn(m) != 0) {
      const std::string mag = to_string(abs(m));
      const bool compound = combo.find(' ') != std::string::npos;
      t += (sgn(m) > 0 ? " - " : " + ") + (mag == "1" ? "" : mag + "*") + (compound ? "(" + combo + ")" : combo);
    }
    if (t != std::string(1, tnames[k]) || !target.empty()) {
      if (!target.empty()) target += ", ";
      target += std::string(1, tnames[k]) + "' = " + t;
    }
    ++k;
  }
  if (!source.empty()) g.normalization = "source: " + source;
  if (!target.empty()) g.normalization += (g.normalization.empty() ? "" : "; ") + std::string("target: ") + target;
}

bool is_scaled_square(const QPoly& p, std::size_t var) {
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  return e[var] == 2 && e[1 - var] == 0;
}

void normalize_double_fold(GermMap& g) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || !is_scaled_square(g.f[i], 0) || !is_scaled_square(g.f[j], 1)) continue;
      const std::size_t h = 3 - i - j;
      g.input_class = GermClass::DOUBLE_FOLD;
      g.normal[0] = QPoly::variable(g.vars(), 0).pow(2);
      g.normal[1] = QPoly::variable(g.vars(), 1).pow(2);
      g.normal[2] = g.f[h];
      const char tn[] = {'X', 'Y', 'Z'};
      if (!(i == 0 && j == 1 && g.f[0] == g.normal[0] && g.f[1] == g.normal[1]))
        g.normalization = std::string("target: X' = ") + tn[i] + "/" + to_string(g.f[i].terms().begin()->second) +
                          ", Y' = " + tn[j] + "/" + to_string(g.f[j].terms().begin()->second) + ", Z' = " + tn[h];
      return;
    }
  g.input_class = GermClass::UNSUPPORTED;
  g.reason = "corank 2 germ not of the form (a*x^2, b*y^2, h)";
}

}  // namespace

GermMap make_germ(std::array<QPoly, 3> f) {
  VarsPtr vars;
  for (const auto& p : f)
    if (p.vars()) vars = p.vars();
  if (!vars) vars = make_vars({"x", "y"});
  for (auto& p : f) {
    if (!p.vars()) p = QPoly(vars);
    if (p.nvars() != 2) throw DomainError("germ components must be polynomials in two variables");
    if (sgn(p.constant_term()) != 0) throw PreconditionViolation("germ does not map the origin to the origin");
  }
  GermMap g;
  g.f = f;
  g.normal = f;
  int rank = 0;
  {
    std::array<std::array<Rational, 2>, 3> L{linear_part(f[0]), linear_part(f[1]), linear_part(f[2])};
    // rank of a 3x2 matrix
    bool nonzero = false;
    for (const auto& r : L)
      if (sgn(r[0]) != 0 || sgn(r[1]) != 0) nonzero = true;
    if (nonzero) {
      rank = 1;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (sgn(L[i][0] * L[j][1] - L[i][1] * L[j][0]) != 0) rank = 2;
    }
  }
  g.corank = 2 - rank;
  if (g.corank == 0) {
    g.input_class = GermClass::IMMERSION;
  } else if (g.corank == 1) {
    g.input_class = GermClass::CORANK1;
    normalize_corank1(g);
  } else {
    normalize_double_fold(g);
  }
  return g;
}

}  // namespace wcurve
