#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wcurve/errors.hpp"
#include "wcurve/polynomial.hpp"

namespace wcurve {

/// Power series in one parameter u known modulo u^precision.
///
/// Coefficients of u^i with i < precision are exact; everything from
/// u^precision on is unknown. kExact marks a series that is known completely
/// (a polynomial).
template <class C>
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  TruncatedSeries() : prec_(kExact) {}
  TruncatedSeries(std::vector<C> coeffs, int precision) : c_(std::move(coeffs)), prec_(precision) { normalize(); }

  static TruncatedSeries constant(const C& c) { return TruncatedSeries({c}, kExact); }
  static TruncatedSeries monomial(const C& c, int k) {
    std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
    v.back() = c;
    return TruncatedSeries(std::move(v), kExact);
  }
  /// Zero with no known coefficients.
  static TruncatedSeries unknown() { return TruncatedSeries({}, 0); }

  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  const std::vector<C>& coeffs() const { return c_; }

  C coeff(int i) const {
    if (i >= prec_) throw PrecisionExhausted("coefficient beyond known precision");
    if (i < 0 || i >= static_cast<int>(c_.size())) return C(0);
    return c_[static_cast<std::size_t>(i)];
  }

  /// True when every known coefficient vanishes.
  bool known_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }

  /// Index of the first nonzero coefficient. Throws PrecisionExhausted when
  /// all known coefficients vanish.
  int valuation() const {
    if (c_.empty()) {
      if (is_exact()) throw DomainError("valuation of the zero series");
      throw PrecisionExhausted("series vanishes to its known precision");
    }
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!detail::coeff_is_zero(c_[i])) return static_cast<int>(i);
    return static_cast<int>(c_.size());
  }
  /// Valuation if known, otherwise the precision (a lower bound).
  int valuation_bound() const {
    if (c_.empty()) return prec_;
    return valuation();
  }

  TruncatedSeries truncated(int n) const { return TruncatedSeries(c_, std::min(prec_, n)); }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int p = std::min(a.prec_, b.prec_);
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return TruncatedSeries(std::move(r), p);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int va = a.valuation_bound(), vb = b.valuation_bound();
    const long pl = std::min(static_cast<long>(a.prec_) + vb, static_cast<long>(b.prec_) + va);
    const int p = static_cast<int>(std::min<long>(pl, kExact));
    if (a.c_.empty() || b.c_.empty()) return TruncatedSeries({}, p);
    const std::size_t len = std::min<std::size_t>(a.c_.size() + b.c_.size() - 1, static_cast<std::size_t>(p));
    std::vector<C> r(len, C(0));
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(r), p);
  }
  friend TruncatedSeries operator*(const C& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& c : r.c_) c = s * c;
    r.normalize();
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries pow(unsigned k) const {
    TruncatedSeries r = constant(C(1));
    TruncatedSeries base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  /// Multiplication by u^k (k may be negative when the low coefficients vanish).
  TruncatedSeries shifted(int k) const {
    if (k >= 0) {
      std::vector<C> r(static_cast<std::size_t>(k), C(0));
      r.insert(r.end(), c_.begin(), c_.end());
      return TruncatedSeries(std::move(r), is_exact() ? kExact : prec_ + k);
    }
    const int s = -k;
    for (int i = 0; i < s; ++i)
      if (!detail::coeff_is_zero(coeff(i))) throw DomainError("negative shift of a series with low terms");
    std::vector<C> r;
    if (static_cast<int>(c_.size()) > s) r.assign(c_.begin() + s, c_.end());
    return TruncatedSeries(std::move(r), is_exact() ? kExact : prec_ - s);
  }

  /// Substitution u -> u^k.
  TruncatedSeries stretched(int k) const {
    std::vector<C> r(c_.empty() ? 0 : (c_.size() - 1) * static_cast<std::size_t>(k) + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
    const int p = is_exact() ? kExact : (prec_ - 1) * k + 1;
    return TruncatedSeries(std::move(r), p);
  }

  TruncatedSeries derivative() const {
    std::vector<C> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(C(static_cast<int>(i)) * c_[i]);
    return TruncatedSeries(std::move(r), is_exact() ? kExact : prec_ - 1);
  }

  /// 1/s for s with nonzero constant term, to the precision of s.
  TruncatedSeries inverse() const {
    const C c0 = coeff(0);
    if (detail::coeff_is_zero(c0)) throw DomainError("inverse of a non-unit series");
    const C inv0 = C(1) / c0;
    if (is_exact()) {
      if (c_.size() == 1) return constant(inv0);
      throw DomainError("inverse of an exact non-constant series needs a precision");
    }
    const int n = prec_;
    std::vector<C> r(static_cast<std::size_t>(n), C(0));
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
      C acc(0);
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
        acc = acc + c_[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
      r[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(r), n);
  }

  /// s^(1/k) for s with constant term 1 (finite precision required).
  TruncatedSeries root_of_unit_series(int k) const {
    if (!(coeff(0) == C(1))) throw DomainError("root of a series whose constant term is not 1");
    if (is_exact()) throw DomainError("root of an exact series needs a precision");
    const int n = prec_;
    // Miller's recurrence for b = s^a from s*b' = a*s'*b, here a = 1/k.
    std::vector<C> b(static_cast<std::size_t>(n), C(0));
    b[0] = C(1);
    for (int i = 1; i < n; ++i) {
      C acc(0);
      for (int j = 1; j <= i && j < static_cast<int>(c_.size()); ++j) {
        // (a*j - (i - j)) * s_j * b_{i-j}, a = 1/k, multiplied through by k.
        const C w = C(j - k * (i - j));
        acc = acc + w * c_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
      }
      b[static_cast<std::size_t>(i)] = acc / C(k * i);
    }
    return TruncatedSeries(std::move(b), n);
  }

  /// self(inner(u)) for inner with zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (!detail::coeff_is_zero(inner.coeff(0))) throw DomainError("composition with a series that has a constant term");
    // Unknown tail a_prec*inner^prec + ..., then Horner over the known part.
    TruncatedSeries acc;
    if (!is_exact()) acc = unknown() * inner.pow(static_cast<unsigned>(prec_ - static_cast<int>(c_.size())));
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  /// Compositional inverse of a series with valuation 1 (Lagrange inversion).
  TruncatedSeries reversion() const {
    if (is_exact()) throw DomainError("reversion of an exact series needs a precision");
    if (!detail::coeff_is_zero(coeff(0)) || detail::coeff_is_zero(coeff(1)))
      throw DomainError("reversion requires valuation 1");
    const int n = prec_;
    const TruncatedSeries h = shifted(-1).inverse();
    std::vector<C> g(static_cast<std::size_t>(n), C(0));
    TruncatedSeries hp = constant(C(1));
    for (int k = 1; k < n; ++k) {
      hp = (hp * h).truncated(n - 1);
      g[static_cast<std::size_t>(k)] = hp.coeff(k - 1) / C(k);
    }
    return TruncatedSeries(std::move(g), n);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.prec_ == b.prec_ && a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "u") const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (detail::coeff_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << detail::coeff_to_string(c_[i]) << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^" << prec_ << ")";
    return os.str();
  }

 private:
  void normalize() {
    if (prec_ < 0) prec_ = 0;
    if (static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
  int prec_;
};

/// p(assignment) truncated at u^N. Every variable of p must be assigned.
template <class C>
TruncatedSeries<C> substitute_series(const Polynomial<C>& p, const std::map<std::string, TruncatedSeries<C>>& assignment,
                                     int N) {
  std::vector<const TruncatedSeries<C>*> vals(p.nvars(), nullptr);
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = assignment.find((*p.vars())[i]);
    if (it != assignment.end()) vals[i] = &it->second;
  }
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && !vals[i]) throw DomainError("variable '" + (*p.vars())[i] + "' has no series assigned");
  // Cache powers per variable.
  std::vector<std::vector<TruncatedSeries<C>>> powers(p.nvars());
  auto power = [&](std::size_t i, std::uint32_t k) -> const TruncatedSeries<C>& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(TruncatedSeries<C>::constant(C(1)));
    while (pw.size() <= k) pw.push_back((pw.back() * *vals[i]).truncated(N));
    return pw[k];
  };
  TruncatedSeries<C> acc({}, TruncatedSeries<C>::kExact);
  for (const auto& [e, c] : p.terms()) {
    TruncatedSeries<C> t = TruncatedSeries<C>::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = (t * power(i, e[i])).truncated(N);
    acc = acc + t;
  }
  return acc.truncated(N);
}

}  // namespace wcurve
