#include "wcurve/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "wcurve/errors.hpp"

namespace wcurve {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// Arithmetic in F_p[z] for word-sized primes.
struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    if (b.empty()) throw DomainError("division by zero in F_p[z]");
    if (deg(a) < deg(b)) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    const u64 il = inv(b.back());
    for (int k = deg(a) - deg(b); k >= 0; --k) {
      const u64 c = mul(a[static_cast<std::size_t>(k + deg(b))], il);
      q[static_cast<std::size_t>(k)] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        a[static_cast<std::size_t>(k) + j] = sub(a[static_cast<std::size_t>(k) + j], mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(FpPoly f) const {
    if (f.empty()) return f;
    const u64 il = inv(f.back());
    for (auto& c : f) c = mul(c, il);
    return f;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b, s0 = {1}, s1, t0, t1 = {1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw std::logic_error("Hensel factors not coprime modulo p");
    const u64 il = inv(r0[0]);
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    return {s0, t0};
  }
  FpPoly derivative(const FpPoly& f) const {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p);
    trim(r);
    return r;
  }
  FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
    FpPoly r = {1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
  FpPoly reduce(const ZPoly& f) const {
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer c = f[i] % Integer(static_cast<unsigned long>(p));
      if (c < 0) c += static_cast<unsigned long>(p);
      r[i] = c.get_ui();
    }
    trim(r);
    return r;
  }

  // Equal-degree splitting (Cantor-Zassenhaus) of a product of irreducibles of degree d.
  void split_equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
    if (deg(g) == d) {
      out.push_back(g);
      return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    const Integer e = (pd - 1) / 2;
    for (;;) {
      FpPoly a(static_cast<std::size_t>(deg(g)));
      for (auto& c : a) c = rng() % p;
      trim(a);
      if (deg(a) < 1) continue;
      FpPoly b = sub(powmod(a, e, g), FpPoly{1});
      FpPoly c = gcd(b, g);
      if (deg(c) > 0 && deg(c) < deg(g)) {
        split_equal_degree(c, d, rng, out);
        split_equal_degree(divmod(g, c).first, d, rng, out);
        return;
      }
    }
  }

  // Irreducible factors of a monic squarefree polynomial.
  std::vector<FpPoly> factor_squarefree(FpPoly f) const {
    std::mt19937_64 rng(0x5eed + p);
    std::vector<FpPoly> out;
    FpPoly h = {0, 1};
    const FpPoly x = {0, 1};
    for (int i = 1; deg(f) >= 2 * i; ++i) {
      h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
      FpPoly g = gcd(sub(h, x), f);
      if (deg(g) > 0) {
        split_equal_degree(g, i, rng, out);
        f = divmod(f, g).first;
        h = mod(h, f);
      }
    }
    if (deg(f) > 0) out.push_back(monic(f));
    return out;
  }
};

std::vector<u64> small_primes() {
  std::vector<u64> out;
  const int limit = 50000;
  std::vector<bool> comp(limit, false);
  for (int i = 2; i < limit; ++i) {
    if (comp[static_cast<std::size_t>(i)]) continue;
    if (i > 2) out.push_back(static_cast<u64>(i));
    for (long j = static_cast<long>(i) * i; j < limit; j += i) comp[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly f, const Integer& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(f);
  return f;
}

ZPoly from_fp(const FpPoly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lifts f = g*h (mod p), g and h monic and coprime, to f = G*H (mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& F, const ZPoly& f, const FpPoly& g, const FpPoly& h, int k,
                                    const Integer& modulus) {
  auto [s, t] = F.bezout(g, h);
  ZPoly G = from_fp(g), H = from_fp(h);
  Integer pj = static_cast<unsigned long>(F.p);
  for (int j = 1; j < k; ++j) {
    ZPoly GH = zmul(G, H);
    ZPoly diff(std::max(f.size(), GH.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
    for (std::size_t i = 0; i < GH.size(); ++i) diff[i] -= GH[i];
    diff = zmod(diff, modulus);
    for (auto& c : diff) {
      if (c % pj != 0) throw std::logic_error("Hensel lifting invariant violated");
      c /= pj;
    }
    const FpPoly e = F.reduce(diff);
    auto [q, dG] = F.divmod(F.mul(t, e), g);
    const FpPoly dH = F.add(F.mul(s, e), F.mul(q, h));
    if (G.size() < dG.size()) G.resize(dG.size(), Integer(0));
    for (std::size_t i = 0; i < dG.size(); ++i) G[i] += pj * static_cast<unsigned long>(dG[i]);
    if (H.size() < dH.size()) H.resize(dH.size(), Integer(0));
    for (std::size_t i = 0; i < dH.size(); ++i) H[i] += pj * static_cast<unsigned long>(dH[i]);
    pj *= static_cast<unsigned long>(F.p);
  }
  return {zmod(G, modulus), zmod(H, modulus)};
}

void hensel_multi(const Fp& F, const ZPoly& f, const std::vector<FpPoly>& facs, int k, const Integer& modulus,
                  std::vector<ZPoly>& out) {
  if (facs.size() == 1) {
    out.push_back(zmod(f, modulus));
    return;
  }
  const std::size_t half = facs.size() / 2;
  std::vector<FpPoly> a(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<FpPoly> b(facs.begin() + static_cast<long>(half), facs.end());
  FpPoly g = {1}, h = {1};
  for (const auto& x : a) g = F.mul(g, x);
  for (const auto& x : b) h = F.mul(h, x);
  auto [G, H] = hensel_pair(F, f, g, h, k, modulus);
  hensel_multi(F, G, a, k, modulus, out);
  hensel_multi(F, H, b, k, modulus, out);
}

Integer zcontent(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(ZPoly f) {
  Integer c = zcontent(f);
  if (c == 0) return f;
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) return false;
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + b.size() - 1];
    if (top % b.back() != 0) return false;
    const Integer c = top / b.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  ztrim(q);
  quotient = std::move(q);
  return true;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  static const std::vector<u64> primes = small_primes();

  std::vector<FpPoly> best;
  u64 best_p = 0;
  int good = 0;
  for (u64 p : primes) {
    const Fp F{p};
    if (f.back() % static_cast<unsigned long>(p) == 0) continue;
    FpPoly fp = F.reduce(f);
    if (Fp::deg(F.gcd(fp, F.derivative(fp))) != 0) continue;
    auto facs = F.factor_squarefree(F.monic(fp));
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  if (best_p == 0) throw std::logic_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  const Fp F{best_p};
  const Integer lc = f.back();
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(n);
  bound *= abs(lc);
  bound *= 2;
  int k = 1;
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Monic associate of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly fm = f;
  for (auto& c : fm) c *= lc_inv;
  fm = zmod(fm, modulus);

  std::vector<ZPoly> lifted;
  hensel_multi(F, fm, best, k, modulus, lifted);

  std::vector<ZPoly> result;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  const Integer half = modulus / 2;
  for (std::size_t s = 1; 2 * s <= remaining;) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) idx.push_back(i);
    bool found = false;
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    while (!found) {
      ZPoly g = {f.back()};
      for (std::size_t c : comb) g = zmod(zmul(g, lifted[idx[c]]), modulus);
      for (auto& c : g)
        if (c > half) c -= modulus;
      g = zprimitive(g);
      ZPoly q;
      if (zdivides(f, g, q)) {
        result.push_back(g);
        f = zprimitive(q);
        for (std::size_t c : comb) used[idx[c]] = true;
        remaining -= s;
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && comb[i - 1] == idx.size() - s + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(f);
  return result;
}

ZPoly to_primitive_integer(const UPoly<Rational>& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  ZPoly r;
  for (const auto& c : f.coeffs()) r.push_back(c.get_num() * (den / c.get_den()));
  return zprimitive(r);
}

UPoly<Rational> to_monic_rational(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f) c.emplace_back(x);
  return UPoly<Rational>(std::move(c)).monic();
}

UPoly<Rational> bareiss_det(std::vector<std::vector<UPoly<Rational>>> m) {
  const std::size_t n = m.size();
  UPoly<Rational> prev = UPoly<Rational>::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, rem] = UPoly<Rational>::divmod(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (!rem.is_zero()) throw std::logic_error("inexact Bareiss step");
        m[i][j] = q;
      }
    prev = m[k][k];
  }
  UPoly<Rational> d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

UPoly<Rational> to_rational_poly(const UPoly<AlgebraicNumber>& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.push_back(a.rational_value());
  return UPoly<Rational>(std::move(c));
}

Factorization<Rational> factor_rational(const UPoly<Rational>& f) {
  Factorization<Rational> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    if (g.degree() == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    for (const auto& z : zassenhaus(to_primitive_integer(g))) out.emplace_back(to_monic_rational(z), mult);
  }
  return out;
}

bool is_irreducible(const UPoly<Rational>& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_rational(f);
  return fac.size() == 1 && fac[0].second == 1;
}

UPoly<Rational> shifted_norm(const FieldPtr& field, const UPoly<AlgebraicNumber>& h, long k) {
  if (!field) return to_rational_poly(h);
  const int n = field->degree();
  const auto& m = field->minimal_polynomial().coeffs();
  using Vec = std::vector<UPoly<Rational>>;  // sum_r a^r * v[r](z)
  auto times_a = [&](const Vec& v) {
    Vec r(static_cast<std::size_t>(n));
    const UPoly<Rational> top = v[static_cast<std::size_t>(n - 1)];
    for (int i = n - 1; i >= 1; --i)
      r[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i - 1)] - m[static_cast<std::size_t>(i)] * top;
    r[0] = -(m[0] * top);
    return r;
  };
  // Horner: acc = acc * (z - k a) + h_i.
  Vec acc(static_cast<std::size_t>(n));
  const UPoly<Rational> z = UPoly<Rational>::x();
  for (int i = h.degree(); i >= 0; --i) {
    Vec za(static_cast<std::size_t>(n)), aa = times_a(acc);
    for (std::size_t r = 0; r < acc.size(); ++r) za[r] = acc[r] * z - Rational(k) * aa[r];
    const auto& c = h.coeffs()[static_cast<std::size_t>(i)].coefficients();
    for (std::size_t r = 0; r < c.size(); ++r) za[r] += UPoly<Rational>::constant(c[r]);
    acc = std::move(za);
  }
  std::vector<Vec> mat(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
  Vec col = acc;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    if (j + 1 < n) col = times_a(col);
  }
  return bareiss_det(std::move(mat));
}

namespace {

bool coefficients_rational(const UPoly<AlgebraicNumber>& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

// Irreducible factors of a squarefree polynomial over K.
std::vector<UPoly<AlgebraicNumber>> trager(const FieldPtr& field, const UPoly<AlgebraicNumber>& h) {
  if (h.degree() <= 1) return {h.monic()};
  for (long k : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L, 8L, -8L}) {
    const UPoly<Rational> N = shifted_norm(field, h, k);
    if (gcd(N, N.derivative()).degree() != 0) continue;
    auto nf = factor_rational(N);
    if (nf.size() == 1) return {h.monic()};
    UPoly<AlgebraicNumber> shift({AlgebraicNumber(Rational(k)) * AlgebraicNumber::generator(field), AlgebraicNumber(1)});
    std::vector<UPoly<AlgebraicNumber>> out;
    for (const auto& [Ni, mult] : nf) {
      UPoly<AlgebraicNumber> g = gcd(h, lift_coefficients(Ni).compose(shift));
      if (g.degree() > 0) out.push_back(g);
    }
    return out;
  }
  throw std::logic_error("no squarefree norm found for Trager factorization");
}

}  // namespace

Factorization<AlgebraicNumber> factor_over(const FieldPtr& field, const UPoly<AlgebraicNumber>& f) {
  Factorization<AlgebraicNumber> out;
  if (!field || coefficients_rational(f)) {
    if (!field || field->degree() == 1) {
      for (const auto& [g, m] : factor_rational(to_rational_poly(f))) out.emplace_back(lift_coefficients(g), m);
      return out;
    }
  }
  for (const auto& [g, m] : squarefree_decomposition(f))
    for (auto& h : trager(field, g)) out.emplace_back(std::move(h), m);
  return out;
}

FieldPtr extend_with_root(const FieldPtr& field, const UPoly<AlgebraicNumber>& h) {
  if (h.degree() <= 1) return field;
  if (!field) return NumberField::create(to_rational_poly(h).monic());
  for (long k : {1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L, 8L, -8L}) {
    const UPoly<Rational> N = shifted_norm(field, h, k);
    if (gcd(N, N.derivative()).degree() != 0) continue;
    return NumberField::create(N.monic());
  }
  throw std::logic_error("no primitive element found");
}

SplitResult split_over(const FieldPtr& field, const UPoly<AlgebraicNumber>& f) {
  SplitResult r;
  for (const auto& [g, m] : factor_over(field, f)) {
    if (g.degree() == 1) {
      r.roots.emplace_back(-g.coeff(0) / g.leading(), m);
    } else if (r.obstruction.is_zero()) {
      r.obstruction = g;
    }
  }
  if (!r.obstruction.is_zero()) r.roots.clear();
  return r;
}

}  // namespace wcurve
