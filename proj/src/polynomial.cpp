#include "wcurve/polynomial.hpp"

namespace wcurve {

VarsPtr make_vars(std::initializer_list<std::string> names) { return std::make_shared<const Variables>(names); }
VarsPtr make_vars(const Variables& names) { return std::make_shared<const Variables>(names); }

KPoly to_algebraic(const QPoly& p) {
  return p.map_coefficients<AlgebraicNumber>([](const Rational& c) { return AlgebraicNumber(c); });
}

Rational content(const QPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num = 0, den = 1;
  for (const auto& [e, c] : p.terms()) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  if (sgn(p.lex_leading().second) < 0) r = -r;
  return r;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  const Rational c = content(p);
  return Rational(1 / c) * p;
}

bool divides(const QPoly& d, const QPoly& p, QPoly* quotient) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  QPoly q(p.vars() ? p.vars() : d.vars());
  QPoly r = p;
  if (d.is_constant()) {
    if (quotient) *quotient = Rational(1 / d.constant_term()) * p;
    return true;
  }
  const auto& [ed, cd] = d.lex_leading();
  const Rational inv = 1 / cd;
  while (!r.is_zero()) {
    const auto& [er, cr] = r.lex_leading();
    if (er.size() != ed.size()) return false;
    Exponent m(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      if (er[i] < ed[i]) return false;
      m[i] = er[i] - ed[i];
    }
    const QPoly t = QPoly::monomial(d.vars(), m, cr * inv);
    q += t;
    r -= t * d;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

QPoly exact_divide(const QPoly& p, const QPoly& d) {
  QPoly q;
  if (!divides(d, p, &q)) throw DomainError("inexact polynomial division");
  return q;
}

namespace {

QPoly leading_in(const QPoly& p, std::size_t v) { return p.coefficients_in(v).back(); }

QPoly var_power(const QPoly& like, std::size_t v, int d) {
  Exponent e(like.nvars(), 0);
  e[v] = static_cast<std::uint32_t>(d);
  return QPoly::monomial(like.vars(), e, Rational(1));
}

// lc(B)^(deg A - deg B + 1) * A mod B, in the variable v.
QPoly pseudo_remainder(const QPoly& A, const QPoly& B, std::size_t v) {
  const int dB = B.degree_in(v);
  const QPoly lB = leading_in(B, v);
  QPoly R = A;
  int e = A.degree_in(v) - dB + 1;
  while (!R.is_zero() && R.degree_in(v) >= dB) {
    const QPoly lR = leading_in(R, v);
    R = lB * R - lR * var_power(R, v, R.degree_in(v) - dB) * B;
    --e;
  }
  if (e > 0) R = lB.pow(static_cast<unsigned>(e)) * R;
  return R;
}

std::size_t main_variable(const QPoly& a, const QPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  for (std::size_t v = n; v-- > 0;)
    if ((a.nvars() > v && a.involves(v)) || (b.nvars() > v && b.involves(v))) return v;
  return 0;
}

QPoly gcd_rec(const QPoly& a, const QPoly& b);

QPoly content_in(const QPoly& p, std::size_t v) {
  QPoly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

QPoly primitive_in(const QPoly& p, std::size_t v) {
  return primitive_part(exact_divide(p, content_in(p, v)));
}

QPoly gcd_rec(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return a.constant_like(Rational(1)) + b.constant_like(Rational(0));
  const std::size_t v = main_variable(a, b);
  if (!a.involves(v)) return gcd_rec(a, content_in(b, v));
  if (!b.involves(v)) return gcd_rec(content_in(a, v), b);
  const QPoly ca = content_in(a, v), cb = content_in(b, v);
  QPoly A = exact_divide(a, ca), B = exact_divide(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (!B.is_zero()) {
    QPoly R = pseudo_remainder(A, B, v);
    A = std::move(B);
    B = R.is_zero() ? R : primitive_in(R, v);
  }
  QPoly g = A.degree_in(v) == 0 ? A.constant_like(Rational(1)) : primitive_in(A, v);
  return primitive_part(gcd_rec(ca, cb) * g);
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) { return gcd_rec(a, b); }

QPoly resultant(const QPoly& p, const QPoly& q, std::size_t v) {
  if (p.is_zero() || q.is_zero()) return QPoly(p.vars() ? p.vars() : q.vars());
  const bool pv = p.nvars() > v && p.involves(v);
  const bool qv = q.nvars() > v && q.involves(v);
  if (!pv && !qv) throw DomainError("resultant: both inputs are constant in the eliminated variable");
  if (!qv) return q.pow(static_cast<unsigned>(p.degree_in(v)));
  if (!pv) return p.pow(static_cast<unsigned>(q.degree_in(v)));

  QPoly A = p, B = q;
  bool negate = false;
  if (A.degree_in(v) < B.degree_in(v)) {
    std::swap(A, B);
    if (A.degree_in(v) % 2 == 1 && B.degree_in(v) % 2 == 1) negate = true;
  }
  QPoly g = A.constant_like(Rational(1));
  QPoly h = g;
  for (;;) {
    const int dA = A.degree_in(v), dB = B.degree_in(v);
    const int delta = dA - dB;
    if (dA % 2 == 1 && dB % 2 == 1) negate = !negate;
    QPoly R = pseudo_remainder(A, B, v);
    A = std::move(B);
    if (R.is_zero()) return R;
    B = exact_divide(R, g * h.pow(static_cast<unsigned>(delta)));
    g = leading_in(A, v);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.degree_in(v) <= 0) break;
  }
  const int dA = A.degree_in(v);
  QPoly res = exact_divide(B.pow(static_cast<unsigned>(dA)), h.pow(static_cast<unsigned>(dA - 1)));
  return negate ? -res : res;
}

QPoly resultant(const QPoly& p, const QPoly& q, const std::string& var) {
  const VarsPtr& vars = p.vars() ? p.vars() : q.vars();
  if (!vars) throw DomainError("resultant of context-free constants");
  return resultant(p, q, QPoly::index_of(*vars, var));
}

SquarefreeResult squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  QPoly g = p;
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v) g = gcd(g, p.derivative(v));
  SquarefreeResult r;
  r.part = exact_divide(p, g);
  r.repeated = g;
  r.is_squarefree = sgn(g.constant_term()) != 0;
  return r;
}

QPoly local_normalize(const QPoly& p) {
  if (p.is_zero()) return p;
  QPoly r = primitive_part(p);
  const int ord = r.order();
  // Lexicographically largest exponent among the lowest-degree terms.
  const std::pair<const Exponent, Rational>* lead = nullptr;
  for (const auto& t : r.terms())
    if (QPoly::degree_of(t.first) == ord) lead = &t;
  if (sgn(lead->second) < 0) r = -r;
  return r;
}

}  // namespace wcurve
