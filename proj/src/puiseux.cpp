#include "wcurve/puiseux.hpp"

#include <numeric>

#include "wcurve/factor.hpp"

namespace wcurve {

Direction make_direction(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.is_zero()) return {AlgebraicNumber(1), b / a};
  if (!b.is_zero()) return {AlgebraicNumber(0), AlgebraicNumber(1)};
  throw DomainError("zero vector is not a direction");
}

std::string to_string(const Direction& d) { return "(" + d.a.to_string() + " : " + d.b.to_string() + ")"; }

int PuiseuxBranch::x_exponent() const { return vertical() ? 0 : x.valuation(); }

namespace {

using KUPoly = UPoly<AlgebraicNumber>;

// Raised when a Newton polygon edge polynomial does not split over the current field.
struct NeedExtension {
  KUPoly factor;
};

// Current coordinates in terms of the expansion parameter u and the unknown z:
// x = lambda*u^E, y = ypart(u) + kappa*u^P*z.
struct Transform {
  AlgebraicNumber lambda{1};
  int E = 1;
  AlgebraicNumber kappa{1};
  int P = 0;
  KSeries ypart;  // exact
};

struct Point {
  int i, j;
  AlgebraicNumber a;
};

std::vector<Point> support(const KPoly& F) {
  std::vector<Point> pts;
  for (const auto& [e, c] : F.terms()) pts.push_back({static_cast<int>(e[0]), static_cast<int>(e[1]), c});
  return pts;
}

// c_n u^n -> c_n * w^(beta n) * S^(q n).
KSeries substitute_monomial(const KSeries& s, const AlgebraicNumber& wb, int q) {
  std::vector<AlgebraicNumber> out;
  const auto& c = s.coeffs();
  if (!c.empty()) out.assign((c.size() - 1) * static_cast<std::size_t>(q) + 1, AlgebraicNumber(0));
  AlgebraicNumber pw(1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (!c[n].is_zero()) out[n * static_cast<std::size_t>(q)] = c[n] * pw;
    pw = pw * wb;
  }
  return KSeries(std::move(out), KSeries::kExact);
}

std::vector<Integer> binomials(int n) {
  std::vector<Integer> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
  return b;
}

int delta_from_exponents(const KSeries& y, int e) {
  if (e <= 1) return 0;
  int cur = e;
  long twice = 0;
  const auto& c = y.coeffs();
  for (std::size_t n = 1; n < c.size() && cur > 1; ++n) {
    if (c[n].is_zero()) continue;
    const int g = std::gcd(cur, static_cast<int>(n));
    if (g < cur) {
      twice += static_cast<long>(n - 1) * (cur - g);
      cur = g;
    }
  }
  if (cur > 1) throw PrecisionExhausted("characteristic exponents beyond known precision");
  return static_cast<int>(twice / 2);
}

PuiseuxBranch make_branch(const FieldPtr& K, KSeries x, KSeries y) {
  PuiseuxBranch b;
  b.field = K;
  b.x = std::move(x);
  b.y = std::move(y);
  if (b.vertical()) {
    b.multiplicity = 1;
    b.tangent = {AlgebraicNumber(0), AlgebraicNumber(1)};
    b.delta = 0;
    return b;
  }
  const int e = b.x.valuation();
  const int vy = b.y.valuation_bound();
  b.multiplicity = std::min(e, vy);
  const int m = b.multiplicity;
  b.tangent = make_direction(b.x.coeff(m), m < b.y.precision() ? b.y.coeff(m) : AlgebraicNumber(0));
  b.delta = delta_from_exponents(b.y, e);
  return b;
}

class Expander {
 public:
  Expander(FieldPtr K, int N, const VarsPtr& vars) : K_(std::move(K)), N_(N), vars_(vars) {}

  void run(const KPoly& F, const Transform& T) { expand(F, T); }
  std::vector<PuiseuxBranch>& branches() { return out_; }

 private:
  void emit(const Transform& T, const KSeries& Z) {
    KSeries x = KSeries::monomial(T.lambda, T.E);
    KSeries y = T.ypart + (T.kappa * Z).shifted(T.P);
    out_.push_back(make_branch(K_, std::move(x), std::move(y)));
  }

  // z = Z(s) with Z(0) = 0 for F with F(0,0) = 0 and F_z(0,0) != 0, to precision N.
  KSeries implicit_root(const KPoly& F) {
    const KPoly Fz = F.derivative(1);
    const std::string& sv = (*vars_)[0];
    const std::string& zv = (*vars_)[1];
    const KSeries u = KSeries::monomial(AlgebraicNumber(1), 1);
    KSeries Z({}, KSeries::kExact);
    int p = 1;
    while (p < N_) {
      const int p2 = std::min(2 * p, N_);
      const KSeries val = substitute_series(F, {{sv, u}, {zv, Z}}, p2);
      const KSeries der = substitute_series(Fz, {{sv, u}, {zv, Z}}, p2);
      const KSeries next = (Z - val * der.inverse()).truncated(p2);
      Z = KSeries(next.coeffs(), KSeries::kExact);
      p = p2;
    }
    return KSeries(Z.coeffs(), N_);
  }

  void expand(KPoly F, const Transform& T) {
    auto pts = support(F);
    int jlow = INT_MAX;
    for (const auto& pt : pts) jlow = std::min(jlow, pt.j);
    if (jlow >= 2) throw PreconditionViolation("curve is not reduced at the origin");
    if (jlow == 1) {
      emit(T, KSeries({}, KSeries::kExact));
      KPoly G(F.vars());
      for (const auto& [e, c] : F.terms()) G.add_term(Exponent{e[0], e[1] - 1}, c);
      F = std::move(G);
      pts = support(F);
    }
    int m = INT_MAX;
    for (const auto& pt : pts)
      if (pt.i == 0) m = std::min(m, pt.j);
    if (m == 0) return;
    if (m == INT_MAX) throw std::logic_error("expansion polynomial divisible by the parameter");
    if (m == 1) {
      emit(T, implicit_root(F));
      return;
    }
    // Lower Newton polygon from (0, m) down to the s-axis.
    int ai = 0, aj = m;
    while (aj > 0) {
      int bi = -1, bj = -1;
      for (const auto& pt : pts) {
        if (pt.j >= aj) continue;
        // Minimise (pt.i - ai)/(aj - pt.j); ties go to the lowest j.
        if (bi < 0) {
          bi = pt.i;
          bj = pt.j;
          continue;
        }
        const long lhs = static_cast<long>(pt.i - ai) * (aj - bj);
        const long rhs = static_cast<long>(bi - ai) * (aj - pt.j);
        if (lhs < rhs || (lhs == rhs && pt.j < bj)) {
          bi = pt.i;
          bj = pt.j;
        }
      }
      edge(F, T, pts, ai, aj, bi, bj);
      ai = bi;
      aj = bj;
    }
  }

  void edge(const KPoly& F, const Transform& T, const std::vector<Point>& pts, int i1, int j1, int i2, int j2) {
    const int g = std::gcd(i2 - i1, j1 - j2);
    const int p = (i2 - i1) / g, q = (j1 - j2) / g;
    const long c = static_cast<long>(i2) * q + static_cast<long>(j2) * p;
    std::vector<AlgebraicNumber> psi(static_cast<std::size_t>((j1 - j2) / q) + 1, AlgebraicNumber(0));
    for (const auto& pt : pts)
      if (static_cast<long>(pt.i) * q + static_cast<long>(pt.j) * p == c)
        psi[static_cast<std::size_t>((pt.j - j2) / q)] = pt.a;
    const KUPoly psi_poly(psi);
    const SplitResult split = split_over(K_, psi_poly);
    if (!split.splits()) throw NeedExtension{split.obstruction};

    int alpha = 0;
    if (p > 1)
      while ((static_cast<long>(alpha) * q) % p != 1) ++alpha;
    const int beta = (alpha * q - 1) / p;

    for (const auto& [w, mult] : split.roots) {
      (void)mult;
      const AlgebraicNumber wb = w.pow(beta), wa = w.pow(alpha);
      // F(w^beta S^q, S^p (w^alpha + z)) / S^c
      KPoly G(F.vars());
      for (const auto& pt : pts) {
        const long sexp = static_cast<long>(pt.i) * q + static_cast<long>(pt.j) * p - c;
        const AlgebraicNumber base = pt.a * wb.pow(pt.i);
        const auto bin = binomials(pt.j);
        AlgebraicNumber wap(1);  // wa^(j-k)
        std::vector<AlgebraicNumber> wpow(static_cast<std::size_t>(pt.j) + 1);
        for (int k = 0; k <= pt.j; ++k) {
          wpow[static_cast<std::size_t>(k)] = wap;
          wap = wap * wa;
        }
        for (int k = 0; k <= pt.j; ++k) {
          const AlgebraicNumber coef =
              base * AlgebraicNumber(Rational(bin[static_cast<std::size_t>(k)])) * wpow[static_cast<std::size_t>(pt.j - k)];
          G.add_term(Exponent{static_cast<std::uint32_t>(sexp), static_cast<std::uint32_t>(k)}, coef);
        }
      }
      Transform U;
      U.lambda = T.lambda * wb.pow(T.E);
      U.E = T.E * q;
      U.kappa = T.kappa * wb.pow(T.P);
      U.P = q * T.P + p;
      U.ypart = substitute_monomial(T.ypart, wb, q) + KSeries::monomial(U.kappa * wa, U.P);
      expand(G, U);
    }
  }

  FieldPtr K_;
  int N_;
  VarsPtr vars_;
  std::vector<PuiseuxBranch> out_;
};

bool divisible_by_x(const QPoly& g) {
  for (const auto& [e, c] : g.terms())
    if (e[0] == 0) return false;
  return true;
}

BranchDecomposition decompose_over(const QPoly& g, const FieldPtr& K, int N) {
  BranchDecomposition d;
  d.field = K;
  d.precision = N;
  QPoly h = g;
  if (divisible_by_x(h)) {
    d.branches.push_back(make_branch(K, KSeries({}, KSeries::kExact), KSeries::monomial(AlgebraicNumber(1), 1)));
    QPoly q(h.vars());
    for (const auto& [e, c] : h.terms()) q.add_term(Exponent{e[0] - 1, e[1]}, c);
    h = std::move(q);
    if (divisible_by_x(h) && !h.is_zero()) throw PreconditionViolation("curve is not reduced at the origin");
  }
  if (!h.is_zero() && sgn(h.constant_term()) == 0) {
    Expander ex(K, N, h.vars());
    Transform T;
    T.ypart = KSeries({}, KSeries::kExact);
    ex.run(to_algebraic(h), T);
    for (auto& b : ex.branches()) d.branches.push_back(std::move(b));
  }
  return d;
}

void check_two_variables(const QPoly& g) {
  if (g.nvars() != 2) throw DomainError("plane curve expected in two variables");
  if (g.is_zero()) throw DomainError("zero polynomial does not define a curve");
  if (sgn(g.constant_term()) != 0) throw DomainError("curve does not pass through the origin");
}

int default_precision(const QPoly& g) {
  const ExtNat mu = milnor_number(g);
  if (!mu) throw PreconditionViolation("curve is not reduced at the origin (infinite Milnor number)");
  return static_cast<int>(2 * *mu + 2);
}

constexpr int kMaxPrecision = 4096;

}  // namespace

BranchDecomposition branch_decomposition(const QPoly& g, int precision) {
  check_two_variables(g);
  const int N = precision > 0 ? precision : default_precision(g);
  FieldPtr K;
  for (;;) {
    try {
      BranchDecomposition d = decompose_over(g, K, N);
      // Each branch must satisfy the equation to its known precision.
      const KPoly gk = to_algebraic(g);
      for (const auto& b : d.branches) {
        const KSeries r = substitute_series(gk, {{(*g.vars())[0], b.x}, {(*g.vars())[1], b.y}}, b.y.precision());
        if (!r.known_zero()) throw std::logic_error("Puiseux branch does not satisfy the curve equation");
      }
      return d;
    } catch (const NeedExtension& ne) {
      K = extend_with_root(K, ne.factor);
    }
  }
}

TangentCone tangent_directions(const QPoly& g) {
  if (g.is_zero()) throw DomainError("tangent cone of the zero polynomial");
  if (g.nvars() != 2) throw DomainError("plane curve expected in two variables");
  const QPoly h = g.lowest_form();
  const int d = h.order();
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));  // h(1, t)
  for (const auto& [e, c] : h.terms()) coeffs[e[1]] = c;
  const UPoly<Rational> ht(coeffs);
  TangentCone cone;
  FieldPtr K;
  for (;;) {
    const SplitResult s = split_over(K, lift_coefficients(ht));
    if (!s.splits()) {
      K = extend_with_root(K, s.obstruction);
      continue;
    }
    cone.field = K;
    for (const auto& [t, m] : s.roots) cone.directions.push_back(make_direction(AlgebraicNumber(1), t));
    break;
  }
  if (ht.degree() < d) cone.directions.push_back({AlgebraicNumber(0), AlgebraicNumber(1)});
  return cone;
}

long branch_intersection(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  if (a.vertical() && b.vertical()) throw DomainError("intersection of a branch with itself");
  if (a.vertical()) return b.x.valuation();
  if (b.vertical()) return a.x.valuation();
  const int e = a.x.valuation();
  const AlgebraicNumber lambda = a.x.coeff(e);
  // Power sums of the conjugates y(zeta*t), t^e = x/lambda, as series in x.
  std::vector<KSeries> P(static_cast<std::size_t>(e) + 1);
  KSeries ys = KSeries::constant(AlgebraicNumber(1));
  const AlgebraicNumber inv_lambda = lambda.inverse();
  for (int s = 1; s <= e; ++s) {
    ys = ys * a.y;
    const int prec = ys.precision();
    const int xprec = ys.is_exact() ? (static_cast<int>(ys.coeffs().size()) + e - 1) / e + 1 : (prec - 1) / e + 1;
    std::vector<AlgebraicNumber> c(static_cast<std::size_t>(xprec), AlgebraicNumber(0));
    AlgebraicNumber lp(1);
    for (int m = 0; m < xprec; ++m) {
      const std::size_t idx = static_cast<std::size_t>(m) * static_cast<std::size_t>(e);
      if (idx < ys.coeffs().size()) c[static_cast<std::size_t>(m)] = AlgebraicNumber(e) * ys.coeffs()[idx] * lp;
      lp = lp * inv_lambda;
    }
    P[static_cast<std::size_t>(s)] = KSeries(std::move(c), ys.is_exact() ? KSeries::kExact : xprec);
  }
  // Elementary symmetric functions by Newton's identities.
  std::vector<KSeries> sigma(static_cast<std::size_t>(e) + 1);
  sigma[0] = KSeries::constant(AlgebraicNumber(1));
  for (int k = 1; k <= e; ++k) {
    KSeries acc({}, KSeries::kExact);
    for (int i = 1; i <= k; ++i) {
      KSeries t = sigma[static_cast<std::size_t>(k - i)] * P[static_cast<std::size_t>(i)];
      acc = (i % 2 == 1) ? acc + t : acc - t;
    }
    sigma[static_cast<std::size_t>(k)] = AlgebraicNumber(Rational(1, k)) * acc;
  }
  // W_a(x_b, y_b) = sum_k (-1)^k sigma_k(x_b) y_b^(e-k)
  KSeries total({}, KSeries::kExact);
  KSeries ypow = KSeries::constant(AlgebraicNumber(1));
  for (int k = e; k >= 0; --k) {
    KSeries t = sigma[static_cast<std::size_t>(k)].compose(b.x) * ypow;
    total = (k % 2 == 0) ? total + t : total - t;
    ypow = ypow * b.y;
  }
  return total.valuation();
}

long delta_invariant(const BranchDecomposition& d) {
  long delta = 0;
  for (const auto& b : d.branches) delta += b.delta;
  for (std::size_t i = 0; i < d.branches.size(); ++i)
    for (std::size_t j = i + 1; j < d.branches.size(); ++j) delta += branch_intersection(d.branches[i], d.branches[j]);
  return delta;
}

ExtNat milnor_via_branches(const QPoly& g) {
  check_two_variables(g);
  if (!squarefree_part(g).is_squarefree) return std::nullopt;
  for (int N = default_precision(g); N <= kMaxPrecision; N *= 2) {
    try {
      const BranchDecomposition d = branch_decomposition(g, N);
      return 2 * delta_invariant(d) - static_cast<long>(d.branches.size()) + 1;
    } catch (const PrecisionExhausted&) {
    }
  }
  throw PrecisionExhausted("Milnor number from branches: precision limit reached");
}

ExtNat intersection_via_branches(const QPoly& g, const QPoly& h) {
  check_two_variables(g);
  check_two_variables(h);
  if (sgn(gcd(g, h).constant_term()) == 0) return std::nullopt;
  if (!squarefree_part(g).is_squarefree) throw PreconditionViolation("branch intersection needs a reduced curve");
  const KPoly hk = to_algebraic(h);
  for (int N = default_precision(g); N <= kMaxPrecision; N *= 2) {
    try {
      const BranchDecomposition d = branch_decomposition(g, N);
      long total = 0;
      for (const auto& b : d.branches)
        total += substitute_series(hk, {{(*h.vars())[0], b.x}, {(*h.vars())[1], b.y}}, N).valuation();
      return total;
    } catch (const PrecisionExhausted&) {
    }
  }
  throw PrecisionExhausted("intersection from branches: precision limit reached");
}

SpaceBranch image_parametrization(const std::array<QPoly, 3>& f, const PuiseuxBranch& b, int precision) {
  SpaceBranch s;
  const VarsPtr& vars = f[0].vars();
  bool all_exact_zero = true;
  int best = -1, k = INT_MAX;
  const int N = b.x.is_exact() && b.y.is_exact() ? KSeries::kExact : precision;
  for (int i = 0; i < 3; ++i) {
    s.composite[i] = substitute_series(to_algebraic(f[i]), {{(*vars)[0], b.x}, {(*vars)[1], b.y}}, N);
    if (s.composite[i].is_exact_zero()) continue;
    all_exact_zero = false;
    if (s.composite[i].known_zero()) continue;
    const int v = s.composite[i].valuation();
    if (v < k) {
      k = v;
      best = i;
    }
  }
  if (all_exact_zero) throw PreconditionViolation("map is constant on a branch of the double point curve");
  if (best < 0) throw PrecisionExhausted("composite vanishes to the known precision");
  s.coordinate = best;
  s.order = k;
  const KSeries& lead = s.composite[best];
  const AlgebraicNumber c = lead.coeff(k);
  const bool monomial = lead.is_exact() && lead.coeffs().size() == static_cast<std::size_t>(k) + 1;
  if (monomial) {
    s.normalized = s.composite;
  } else {
    // w = u * (lead / (c u^k))^(1/k), then u = psi(w).
    KSeries unit = c.inverse() * lead.truncated(precision).shifted(-k);
    KSeries w = unit.root_of_unit_series(k).shifted(1);
    const KSeries psi = w.reversion();
    for (int i = 0; i < 3; ++i) s.normalized[i] = s.composite[i].compose(psi);
  }
  int d = k;
  bool exact = true;
  for (const auto& ser : s.normalized) {
    if (!ser.is_exact()) exact = false;
    const auto& cs = ser.coeffs();
    for (std::size_t n = 0; n < cs.size(); ++n)
      if (!cs[n].is_zero()) d = std::gcd(d, static_cast<int>(n));
  }
  s.primitive_degree = d;
  s.degree_certain = exact || d == 1;
  s.image_multiplicity = k / d;
  for (int i = 0; i < 3; ++i)
    s.tangent[i] = k < s.normalized[i].precision() ? s.normalized[i].coeff(k) : AlgebraicNumber(0);
  return s;
}

bool same_image(const SpaceBranch& s1, const SpaceBranch& s2) {
  if (s1.coordinate != s2.coordinate || s1.order != s2.order) return false;
  // ratios r^n = n2_n / n1_n
  std::vector<std::pair<int, AlgebraicNumber>> ratios;
  for (int i = 0; i < 3; ++i) {
    const KSeries& a = s1.normalized[i];
    const KSeries& b = s2.normalized[i];
    const int top = std::min(a.precision(), b.precision());
    const int len = std::min<long>(top, static_cast<long>(std::max(a.coeffs().size(), b.coeffs().size())));
    for (int n = 0; n < len; ++n) {
      const AlgebraicNumber x = a.coeff(n), y = b.coeff(n);
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      ratios.emplace_back(n, y / x);
    }
  }
  if (ratios.empty()) return true;
  // r^g from a Bezout combination of the exponents.
  int g = ratios[0].first;
  AlgebraicNumber rg = ratios[0].second;
  for (std::size_t t = 1; t < ratios.size(); ++t) {
    const int n = ratios[t].first;
    if (n % g == 0) continue;
    // extended gcd: a*g + b*n = h
    long a0 = 1, b0 = 0, a1 = 0, b1 = 1, r0 = g, r1 = n;
    while (r1 != 0) {
      const long qq = r0 / r1;
      long tmp = r0 - qq * r1;
      r0 = r1;
      r1 = tmp;
      tmp = a0 - qq * a1;
      a0 = a1;
      a1 = tmp;
      tmp = b0 - qq * b1;
      b0 = b1;
      b1 = tmp;
    }
    rg = rg.pow(a0) * ratios[t].second.pow(b0);
    g = static_cast<int>(r0);
  }
  for (const auto& [n, r] : ratios)
    if (!(rg.pow(n / g) == r)) return false;
  return true;
}

}  // namespace wcurve
