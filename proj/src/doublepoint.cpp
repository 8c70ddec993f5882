#include "wcurve/doublepoint.hpp"

#include "wcurve/errors.hpp"

namespace wcurve {

std::string to_string(ComponentKind k) { return k == ComponentKind::FOLD ? "FOLD" : "IDENTIFICATION"; }

VarsPtr doubled_context(const VarsPtr& vars) {
  if (vars->size() != 2) throw DomainError("map germ must be given in two variables");
  const auto& v = *vars;
  return make_vars({v[0], v[1], v[0] + "'", v[1] + "'"});
}

namespace {

// Drops the primed variables, which must not occur.
QPoly restrict_to_source(const QPoly& p, const VarsPtr& vars) {
  QPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    if (e[2] || e[3]) throw std::logic_error("primed variable left after elimination");
    r.add_term(Exponent{e[0], e[1]}, c);
  }
  return r;
}

QPoly reflect(const QPoly& h, bool negate_x, bool negate_y) {
  QPoly r(h.vars());
  for (const auto& [e, c] : h.terms()) {
    const bool flip = (negate_x && e[0] % 2) != (negate_y && e[1] % 2);
    r.add_term(e, flip ? Rational(-c) : c);
  }
  return r;
}

QPoly double_fold_curve(const GermMap& g) {
  const QPoly& h = g.normal[2];
  const VarsPtr& v = g.vars();
  const QPoly x = QPoly::variable(v, 0), y = QPoly::variable(v, 1);
  const QPoly two = QPoly::constant(v, Rational(2));
  const QPoly a = exact_divide(h - reflect(h, true, false), two * x);
  const QPoly b = exact_divide(h - reflect(h, false, true), two * y);
  const QPoly c = exact_divide(h - reflect(h, true, true), two);
  return a * b * c;
}

QPoly corank1_curve(const GermMap& g) {
  const DividedDifferences dd = divided_differences(g.normal);
  const VarsPtr& v4 = dd.vars;
  const QPoly x = QPoly::variable(v4, 0);
  const QPoly a2 = dd.alpha[1][1].substitute(2, x);
  const QPoly a3 = dd.alpha[2][1].substitute(2, x);
  return restrict_to_source(resultant(a2, a3, 3), g.vars());
}

}  // namespace

DividedDifferences divided_differences(const std::array<QPoly, 3>& f) {
  DividedDifferences dd;
  dd.vars = doubled_context(f[0].vars());
  const VarsPtr& v4 = dd.vars;
  const QPoly x = QPoly::variable(v4, 0), y = QPoly::variable(v4, 1);
  const QPoly xp = QPoly::variable(v4, 2), yp = QPoly::variable(v4, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const QPoly fxy = f[i].in_context(v4);
    const QPoly fxpy = fxy.substitute(0, xp);
    const QPoly fxpyp = fxpy.substitute(1, yp);
    dd.alpha[i][0] = exact_divide(fxy - fxpy, x - xp);
    dd.alpha[i][1] = exact_divide(fxpy - fxpyp, y - yp);
    if (!(fxy - fxpyp == dd.alpha[i][0] * (x - xp) + dd.alpha[i][1] * (y - yp)))
      throw IdentityFailure("divided difference identity fails for component " + std::to_string(i + 1));
  }
  return dd;
}

DividedDifferences divided_differences(const GermMap& g) { return divided_differences(g.normal); }

std::vector<QPoly> lifting_ideal(const std::array<QPoly, 3>& f) {
  const DividedDifferences dd = divided_differences(f);
  std::vector<QPoly> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    const QPoly fxy = f[i].in_context(dd.vars);
    gens.push_back(fxy - fxy.substitute(0, QPoly::variable(dd.vars, 2)).substitute(1, QPoly::variable(dd.vars, 3)));
  }
  const auto& a = dd.alpha;
  gens.push_back(a[0][0] * a[1][1] - a[0][1] * a[1][0]);
  gens.push_back(a[0][0] * a[2][1] - a[0][1] * a[2][0]);
  gens.push_back(a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return gens;
}

std::vector<QPoly> lifting_ideal(const GermMap& g) { return lifting_ideal(g.normal); }

QPoly double_point_curve(const GermMap& g) {
  QPoly lambda;
  switch (g.input_class) {
    case GermClass::UNSUPPORTED:
      throw UnsupportedGerm(g.reason.empty() ? "unsupported germ class" : g.reason);
    case GermClass::IMMERSION:
      return QPoly::constant(g.vars(), Rational(1));
    case GermClass::CORANK1:
      lambda = corank1_curve(g);
      break;
    case GermClass::DOUBLE_FOLD:
      lambda = double_fold_curve(g);
      break;
  }
  if (lambda.is_zero()) throw PreconditionViolation("double point curve vanishes identically: map is not generically one-to-one");
  return local_normalize(lambda);
}

FdVerdict is_finitely_determined(const GermMap& g) {
  FdVerdict v;
  v.lambda = double_point_curve(g);
  if (sgn(v.lambda.constant_term()) != 0) {
    v.empty = true;
    v.finitely_determined = true;
    v.mu = 0;
    return v;
  }
  const SquarefreeResult sq = squarefree_part(v.lambda);
  if (!sq.is_squarefree) {
    v.repeated = local_normalize(sq.repeated);
    return v;
  }
  v.mu = milnor_number(v.lambda);
  v.finitely_determined = v.mu.has_value();
  return v;
}

DoublePointData classify_components(const GermMap& g, const QPoly& lambda) {
  DoublePointData data;
  data.lambda = lambda;
  if (sgn(lambda.constant_term()) != 0) return data;
  if (!squarefree_part(lambda).is_squarefree)
    throw PreconditionViolation("double point curve is not reduced; the germ is not finitely determined");
  constexpr int kMaxPrecision = 1024;
  int P = 0;
  for (;;) {
    try {
      const BranchDecomposition bd = branch_decomposition(lambda, P);
      P = bd.precision;
      std::vector<Component> comps;
      for (const auto& b : bd.branches) {
        Component c;
        c.branch = b;
        c.image = image_parametrization(g.normal, b, P);
        comps.push_back(std::move(c));
      }
      const std::size_t n = comps.size();
      std::vector<std::vector<std::size_t>> matches(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && same_image(comps[i].image, comps[j].image)) matches[i].push_back(j);
      DoublePointData out;
      out.lambda = lambda;
      out.field = bd.field;
      for (std::size_t i = 0; i < n; ++i) {
        Component& c = comps[i];
        if (matches[i].empty()) {
          // Every branch of D(f) is identification or fold, and a true partner is never rejected.
          if (c.image.primitive_degree == 1)
            throw IdentityFailure("branch of D(f) with injective image has no partner branch");
          if (c.image.order % 2 != 0) throw IdentityFailure("fold branch with odd image order");
          c.kind = ComponentKind::FOLD;
          c.image_multiplicity = c.image.order / 2;
          ++out.r_f;
          out.image_multiplicity_total += c.image_multiplicity;
        } else {
          const std::size_t j = matches[i].front();
          if (matches[i].size() != 1 || matches[j].size() != 1 || c.image.primitive_degree != 1)
            throw PrecisionExhausted("identification pairing not yet determined");
          c.kind = ComponentKind::IDENTIFICATION;
          c.partner = static_cast<int>(j);
          c.image_multiplicity = c.image.order;
          ++out.r_i;
          if (i < j) out.image_multiplicity_total += c.image_multiplicity;
        }
      }
      if (out.r_i % 2 != 0) throw IdentityFailure("odd number of identification branches");
      out.components = std::move(comps);
      return out;
    } catch (const PrecisionExhausted&) {
      if (P == 0) P = 16;
      if (P >= kMaxPrecision) throw;
      P *= 2;
    }
  }
}

}  // namespace wcurve
