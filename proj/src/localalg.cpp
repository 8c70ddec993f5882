#include "wcurve/localalg.hpp"

#include <algorithm>
#include <climits>

namespace wcurve {

std::string to_string(const ExtNat& n) { return n ? std::to_string(*n) : std::string("INFINITE"); }

bool LocalIdeal::has_unit() const {
  for (const auto& g : generators)
    if (sgn(g.constant_term()) != 0) return true;
  return false;
}

namespace {

constexpr int kNoBound = INT_MAX;

struct Term {
  std::uint32_t a, b;
  Rational c;
};
using LPoly = std::vector<Term>;  // leading term first

int deg(const Term& t) { return static_cast<int>(t.a + t.b); }

// Local degree ordering: lower degree is larger, ties broken by the x exponent.
bool greater(std::uint32_t a1, std::uint32_t b1, std::uint32_t a2, std::uint32_t b2) {
  const auto d1 = a1 + b1, d2 = a2 + b2;
  if (d1 != d2) return d1 < d2;
  return a1 > a2;
}

struct Elem {
  LPoly p;
  int ecart = 0;
  bool dead = false;
};

int ecart_of(const LPoly& p) {
  int top = 0;
  for (const auto& t : p) top = std::max(top, deg(t));
  return top - deg(p.front());
}

void make_primitive(LPoly& p) {
  Integer num = 0, den = 1;
  for (const auto& t : p) {
    num = gcd(num, t.c.get_num());
    den = lcm(den, t.c.get_den());
  }
  Rational s(den, num);
  s.canonicalize();
  if (sgn(p.front().c) < 0) s = -s;
  for (auto& t : p) t.c *= s;
}

LPoly from_poly(const QPoly& q, int bound) {
  if (q.nvars() != 2) throw DomainError("local algebra expects polynomials in two variables");
  LPoly p;
  for (const auto& [e, c] : q.terms())
    if (static_cast<int>(e[0] + e[1]) < bound) p.push_back({e[0], e[1], c});
  std::sort(p.begin(), p.end(), [](const Term& s, const Term& t) { return greater(s.a, s.b, t.a, t.b); });
  return p;
}

QPoly to_poly(const LPoly& p, const VarsPtr& vars) {
  QPoly q(vars);
  for (const auto& t : p) q.add_term(Exponent{t.a, t.b}, t.c);
  return q;
}

// h - c * x^da y^db * g, keeping only terms of degree < bound.
LPoly sub_mul(const LPoly& h, const Rational& c, std::uint32_t da, std::uint32_t db, const LPoly& g, int bound) {
  LPoly r;
  r.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && static_cast<int>(g[j].a + da + g[j].b + db) >= bound) {
      ++j;
      continue;
    }
    if (j == g.size() || (i < h.size() && greater(h[i].a, h[i].b, g[j].a + da, g[j].b + db))) {
      r.push_back(h[i++]);
    } else if (i == h.size() || greater(g[j].a + da, g[j].b + db, h[i].a, h[i].b)) {
      r.push_back({g[j].a + da, g[j].b + db, -(c * g[j].c)});
      ++j;
    } else {
      Rational v = h[i].c - c * g[j].c;
      if (sgn(v) != 0) r.push_back({h[i].a, h[i].b, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

bool divides(const Term& d, const Term& t) { return d.a <= t.a && d.b <= t.b; }

// Mora's normal form: the result is zero or has a leading monomial outside
// the leading ideal of `basis`.
LPoly mora_normal_form(LPoly h, const std::vector<Elem>& basis, int bound) {
  std::vector<Elem> extra;
  while (!h.empty()) {
    const Elem* best = nullptr;
    for (const std::vector<Elem>* pool : {&basis, static_cast<const std::vector<Elem>*>(&extra)})
      for (const auto& g : *pool)
        if (!g.dead && divides(g.p.front(), h.front()) && (!best || g.ecart < best->ecart)) best = &g;
    if (!best) break;
    const LPoly g = best->p;  // `extra` may reallocate below
    const int eg = best->ecart;
    const int eh = ecart_of(h);
    if (eg > eh) extra.push_back({h, eh, false});
    const Term& lh = h.front();
    const Term& lg = g.front();
    h = sub_mul(h, lh.c / lg.c, lh.a - lg.a, lh.b - lg.b, g, bound);
  }
  return h;
}

LPoly s_poly(const LPoly& f, const LPoly& g, int bound) {
  const Term& lf = f.front();
  const Term& lg = g.front();
  const std::uint32_t a = std::max(lf.a, lg.a), b = std::max(lf.b, lg.b);
  // (m/LT f) f - (m/LT g) g with LT f normalized to coefficient of f.
  LPoly mf = sub_mul({}, Rational(-1) / lf.c, a - lf.a, b - lf.b, f, bound);
  return sub_mul(mf, Rational(1) / lg.c, a - lg.a, b - lg.b, g, bound);
}

// Size of the staircase of the leading ideal when it has finite colength,
// restricted to degrees below bound.
std::optional<long> staircase_size(const std::vector<Elem>& basis, int bound, std::vector<Exponent>* monomials) {
  std::uint32_t A = UINT32_MAX, B = UINT32_MAX;
  for (const auto& g : basis) {
    if (g.dead) continue;
    const Term& l = g.p.front();
    if (l.b == 0) A = std::min(A, l.a);
    if (l.a == 0) B = std::min(B, l.b);
  }
  if (bound != kNoBound) {
    A = std::min<std::uint32_t>(A, static_cast<std::uint32_t>(bound));
    B = std::min<std::uint32_t>(B, static_cast<std::uint32_t>(bound));
  }
  if (A == UINT32_MAX || B == UINT32_MAX) return std::nullopt;
  long count = 0;
  for (std::uint32_t i = 0; i < A; ++i)
    for (std::uint32_t j = 0; j < B; ++j) {
      if (static_cast<int>(i + j) >= bound) continue;
      const Term t{i, j, Rational(0)};
      bool in_ideal = false;
      for (const auto& g : basis)
        if (!g.dead && divides(g.p.front(), t)) {
          in_ideal = true;
          break;
        }
      if (in_ideal) continue;
      ++count;
      if (monomials) monomials->push_back(Exponent{i, j});
    }
  return count;
}

// Smallest d such that every monomial of degree d lies in the leading ideal.
std::optional<int> corner_degree(const std::vector<Elem>& basis, int bound) {
  std::uint32_t A = UINT32_MAX, B = UINT32_MAX;
  for (const auto& g : basis) {
    if (g.dead) continue;
    const Term& l = g.p.front();
    if (l.b == 0) A = std::min(A, l.a);
    if (l.a == 0) B = std::min(B, l.b);
  }
  if (A == UINT32_MAX || B == UINT32_MAX) return std::nullopt;
  const int top = std::min<long>(static_cast<long>(A) + B, bound);
  for (int d = 0; d < top; ++d) {
    bool all = true;
    for (int i = 0; i <= d && all; ++i) {
      const Term t{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i), Rational(0)};
      bool in = false;
      for (const auto& g : basis)
        if (!g.dead && divides(g.p.front(), t)) {
          in = true;
          break;
        }
      all = in;
    }
    if (all) return d;
  }
  return top;
}

struct Computation {
  std::vector<Elem> basis;
  int bound = kNoBound;
  bool unit = false;
};

Computation run_mora(const LocalIdeal& ideal) {
  Computation st;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (sgn(g.constant_term()) != 0) {
      st.unit = true;
      return st;
    }
    LPoly p = from_poly(g, kNoBound);
    make_primitive(p);
    st.basis.push_back({p, ecart_of(p), false});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < st.basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto tighten = [&]() {
    const auto d = corner_degree(st.basis, st.bound);
    if (!d || *d >= st.bound) return;
    // Every monomial of degree d is a leading monomial of the ideal, so the
    // ideal contains m^d (degree-compatible local order plus Nakayama).
    st.bound = std::max(*d, 1);
    for (auto& g : st.basis) {
      if (g.dead) continue;
      LPoly t;
      for (auto& term : g.p)
        if (deg(term) < st.bound) t.push_back(term);
      g.p = std::move(t);
      if (g.p.empty()) {
        g.dead = true;
      } else {
        g.ecart = ecart_of(g.p);
      }
    }
  };
  tighten();

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) -> std::uint32_t {
    if (st.basis[pr.first].dead || st.basis[pr.second].dead) return UINT32_MAX;
    const Term& a = st.basis[pr.first].p.front();
    const Term& b = st.basis[pr.second].p.front();
    return std::max(a.a, b.a) + std::max(a.b, b.b);
  };
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const auto& p, const auto& q) { return lcm_degree(p) < lcm_degree(q); });
    const auto [i, j] = *it;
    pairs.erase(it);
    if (st.basis[i].dead || st.basis[j].dead) continue;
    if (static_cast<int>(lcm_degree({i, j})) >= st.bound) continue;
    LPoly h = mora_normal_form(s_poly(st.basis[i].p, st.basis[j].p, st.bound), st.basis, st.bound);
    if (h.empty()) continue;
    make_primitive(h);
    if (deg(h.front()) == 0) {
      st.unit = true;
      return st;
    }
    const std::size_t k = st.basis.size();
    st.basis.push_back({h, ecart_of(h), false});
    for (std::size_t m = 0; m < k; ++m)
      if (!st.basis[m].dead) pairs.emplace_back(m, k);
    tighten();
  }
  return st;
}

VarsPtr context_of(const LocalIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (g.vars()) return g.vars();
  return make_vars({"x", "y"});
}

}  // namespace

std::vector<QPoly> standard_basis(const LocalIdeal& ideal) {
  const VarsPtr vars = context_of(ideal);
  const Computation st = run_mora(ideal);
  if (st.unit) return {QPoly::constant(vars, Rational(1))};
  std::vector<QPoly> out;
  for (const auto& g : st.basis)
    if (!g.dead) out.push_back(to_poly(g.p, vars));
  if (st.bound != kNoBound) {
    // Monomials of degree `bound` lie in the ideal; add those not yet covered.
    for (int i = st.bound; i >= 0; --i) {
      const Term t{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(st.bound - i), Rational(1)};
      bool covered = false;
      for (const auto& g : st.basis)
        if (!g.dead && divides(g.p.front(), t)) covered = true;
      if (!covered) out.push_back(to_poly({t}, vars));
    }
  }
  return out;
}

ColengthResult colength(const LocalIdeal& ideal) {
  ColengthResult r;
  const Computation st = run_mora(ideal);
  if (st.unit) {
    r.value = 0;
    return r;
  }
  r.value = staircase_size(st.basis, st.bound, &r.standard_monomials);
  if (!r.value) r.standard_monomials.clear();
  return r;
}

ExtNat milnor_number(const QPoly& g) {
  if (g.is_zero()) throw DomainError("Milnor number of the zero polynomial");
  if (sgn(g.constant_term()) != 0) throw DomainError("Milnor number requires g(0) = 0");
  return colength({{g.derivative(0), g.derivative(1)}}).value;
}

ExtNat intersection_multiplicity(const QPoly& g1, const QPoly& g2) {
  if (g1.is_zero() || g2.is_zero()) throw DomainError("intersection multiplicity with the zero polynomial");
  if (sgn(g1.constant_term()) != 0 || sgn(g2.constant_term()) != 0)
    throw DomainError("intersection multiplicity requires curves through the origin");
  return colength({{g1, g2}}).value;
}

}  // namespace wcurve
