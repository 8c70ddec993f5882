#pragma once

#include <cassert>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcurve/errors.hpp"
#include "wcurve/rational.hpp"

namespace wcurve {

namespace detail {
// Unqualified calls so that overloads for coefficient types declared later
// are found through argument-dependent lookup.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
template <class C>
std::string coeff_to_string(const C& c) {
  return to_string(c);
}
}  // namespace detail

/// Dense univariate polynomial over a field C, coefficients stored from the
/// constant term upwards with no trailing zeros.
///
/// C must provide field arithmetic, construction from int and a free
/// function `is_zero(const C&)`.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }
  static UPoly monomial(const C& c, int degree) {
    std::vector<C> v(static_cast<std::size_t>(degree) + 1, C(0));
    v.back() = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const C& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<C>& coeffs() const { return c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (wcurve_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const C& s, const UPoly& a) {
    if (wcurve_is_zero(s)) return UPoly();
    UPoly r = a;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Euclidean division; throws on division by zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<C> rem = a.c_;
    std::vector<C> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), C(0));
    const C inv_lead = C(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const C q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
      quo[static_cast<std::size_t>(k)] = q;
      if (wcurve_is_zero(q)) continue;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] =
            rem[static_cast<std::size_t>(k + j)] - q * b.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<C> r(c_.size() - 1, C(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = C(static_cast<int>(i)) * c_[i];
    return UPoly(std::move(r));
  }

  C eval(const C& x) const {
    C acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UPoly::constant(*it);
    return acc;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (C(1) / leading()) * (*this);
  }

  std::string to_string(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const C& c = c_[static_cast<std::size_t>(i)];
      if (wcurve_is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_string(c) << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  static bool wcurve_is_zero(const C& c) { return detail::coeff_is_zero(c); }
  static std::string coeff_string(const C& c) { return detail::coeff_to_string(c); }
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class C>
struct ExtendedGcd {
  UPoly<C> g, s, t;
};

template <class C>
ExtendedGcd<C> extended_gcd(const UPoly<C>& a, const UPoly<C>& b) {
  UPoly<C> r0 = a, r1 = b;
  UPoly<C> s0 = UPoly<C>::constant(C(1)), s1;
  UPoly<C> t0, t1 = UPoly<C>::constant(C(1));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly<C>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<C> s2 = s0 - q * s1;
    UPoly<C> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const C inv = C(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Squarefree decomposition (Yun): f = lc * prod_i g_i^i with g_i monic,
/// squarefree and pairwise coprime. Entries with g_i = 1 are omitted.
template <class C>
std::vector<std::pair<UPoly<C>, int>> squarefree_decomposition(const UPoly<C>& f) {
  std::vector<std::pair<UPoly<C>, int>> out;
  if (f.degree() < 1) return out;
  UPoly<C> fm = f.monic();
  UPoly<C> d = fm.derivative();
  UPoly<C> a = gcd(fm, d);
  UPoly<C> b = fm / a;
  UPoly<C> c = d / a;
  UPoly<C> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<C> g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = e / g;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace wcurve
