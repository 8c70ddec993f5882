#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wcurve/errors.hpp"
#include "wcurve/number_field.hpp"
#include "wcurve/rational.hpp"

namespace wcurve {

using Variables = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Variables>;
using Exponent = std::vector<std::uint32_t>;

VarsPtr make_vars(std::initializer_list<std::string> names);
VarsPtr make_vars(const Variables& names);

/// Sparse distributed polynomial. Terms are kept in a map keyed by exponent
/// vector (lexicographic), zero coefficients are never stored.
///
/// A default-constructed polynomial is the zero polynomial without a variable
/// context; constants without context combine with any context.
template <class C>
class Polynomial {
 public:
  using Terms = std::map<Exponent, C>;

  Polynomial() = default;
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}
  Polynomial(VarsPtr vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) { prune(); }

  static Polynomial constant(const VarsPtr& vars, const C& c) {
    Polynomial p(vars);
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(Exponent(vars->size(), 0), c);
    return p;
  }
  static Polynomial variable(const VarsPtr& vars, const std::string& name) {
    return variable(vars, index_of(*vars, name));
  }
  static Polynomial variable(const VarsPtr& vars, std::size_t index) {
    Exponent e(vars->size(), 0);
    e.at(index) = 1;
    return monomial(vars, std::move(e), C(1));
  }
  static Polynomial monomial(const VarsPtr& vars, Exponent e, const C& c) {
    if (e.size() != vars->size()) throw DomainError("exponent vector length does not match variable context");
    Polynomial p(vars);
    if (!detail::coeff_is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  static std::size_t index_of(const Variables& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars.begin());
  }

  const VarsPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  std::size_t var_index(const std::string& name) const {
    if (!vars_) throw DomainError("unknown variable '" + name + "'");
    return index_of(*vars_, name);
  }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
  }
  C constant_term() const {
    if (terms_.empty()) return C(0);
    const auto& [e, c] = *terms_.begin();
    return is_zero_exponent(e) ? c : C(0);
  }
  C coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  /// Term with the lexicographically largest exponent.
  const std::pair<const Exponent, C>& lex_leading() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const Exponent& e, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    if (vars_ && e.size() != vars_->size()) throw DomainError("exponent vector length does not match variable context");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(widen(o, e), c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(widen(o, e), -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.vars_ ? a.vars_ : b.vars_);
    r.adopt(b);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t n = r.nvars();
    Exponent e(n, 0);
    for (const auto& [ea, ca] : a.terms_) {
      const Exponent wa = r.widen(a, ea);
      for (const auto& [eb, cb] : b.terms_) {
        const Exponent wb = r.widen(b, eb);
        for (std::size_t i = 0; i < n; ++i) e[i] = wa[i] + wb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const C& s, const Polynomial& a) {
    Polynomial r(a.vars_);
    if (detail::coeff_is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    r.prune();
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    if (!compatible(a, b)) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (b.widen(a, e) != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant_like(C(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  Polynomial constant_like(const C& c) const {
    if (!vars_) {
      Polynomial p;
      if (!detail::coeff_is_zero(c)) p.terms_.emplace(Exponent{}, c);
      return p;
    }
    return constant(vars_, c);
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= nvars()) throw DomainError("derivative with respect to unknown variable");
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      --d[var];
      r.add_term(d, C(static_cast<int>(e[var])) * c);
    }
    return r;
  }
  Polynomial derivative(const std::string& var) const { return derivative(var_index(var)); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }
  /// Lowest total degree among the terms.
  int order() const {
    if (terms_.empty()) throw DomainError("order of the zero polynomial is infinite");
    int d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, degree_of(e));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Polynomial homogeneous_part(int degree) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == degree) r.terms_.emplace(e, c);
    return r;
  }
  Polynomial lowest_form() const { return homogeneous_part(order()); }

  /// Coefficients with respect to `var`: result[k] is the coefficient of var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Polynomial(vars_));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      const std::size_t k = f[var];
      f[var] = 0;
      out[k].terms_.emplace(std::move(f), c);
    }
    return out;
  }
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var, const VarsPtr& vars) {
    Polynomial r(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (const auto& [e, c] : coeffs[k].terms_) {
        Exponent f = e;
        f[var] += static_cast<std::uint32_t>(k);
        r.add_term(f, c);
      }
    return r;
  }

  /// Replaces `var` by `value` (same context).
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    auto coeffs = coefficients_in(var);
    Polynomial acc(vars_);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * value + coeffs[k];
    return acc;
  }
  Polynomial substitute(const std::string& var, const Polynomial& value) const {
    return substitute(var_index(var), value);
  }
  Polynomial evaluate(std::size_t var, const C& value) const { return substitute(var, constant_like(value)); }

  /// Same polynomial in a larger context; variables are matched by name.
  Polynomial in_context(const VarsPtr& target) const {
    Polynomial r(target);
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) map[i] = index_of(*target, (*vars_)[i]);
    for (const auto& [e, c] : terms_) {
      Exponent f(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] && i >= map.size()) throw DomainError("cannot embed polynomial into context");
        if (i < map.size()) f[map[i]] = e[i];
      }
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  template <class D, class F>
  Polynomial<D> map_coefficients(F&& fn) const {
    typename Polynomial<D>::Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, fn(c));
    return Polynomial<D>(vars_, std::move(t));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    // Highest total degree first, ties lexicographically descending.
    std::vector<const std::pair<const Exponent, C>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      const int da = degree_of(a->first), db = degree_of(b->first);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
      const bool unit_exp = is_zero_exponent(t->first);
      std::string cs = detail::coeff_to_string(t->second);
      const bool compound = cs.find_first_of("+ ", 1) != std::string::npos;
      bool negative = !compound && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (compound) cs = "(" + cs + ")";
      if (unit_exp) {
        os << cs;
        continue;
      }
      bool need_star = false;
      if (cs != "1") {
        os << cs;
        need_star = true;
      }
      for (std::size_t i = 0; i < t->first.size(); ++i) {
        if (!t->first[i]) continue;
        if (need_star) os << "*";
        os << (*vars_)[i];
        if (t->first[i] > 1) os << "^" << t->first[i];
        need_star = true;
      }
    }
    return os.str();
  }

  static int degree_of(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += static_cast<int>(v);
    return d;
  }
  static bool is_zero_exponent(const Exponent& e) {
    for (auto v : e)
      if (v) return false;
    return true;
  }

 private:
  template <class D>
  friend class Polynomial;

  static bool compatible(const Polynomial& a, const Polynomial& b) {
    if (!a.vars_ || !b.vars_ || a.vars_ == b.vars_) return true;
    return *a.vars_ == *b.vars_;
  }
  // Takes the context of `o` when this polynomial has none; checks agreement otherwise.
  void adopt(const Polynomial& o) {
    if (!o.vars_) {
      if (!o.is_constant()) throw DomainError("polynomial without variable context");
      return;
    }
    if (!vars_) {
      if (!is_constant()) throw DomainError("polynomial without variable context");
      Terms t;
      for (const auto& [e, c] : terms_) t.emplace(Exponent(o.vars_->size(), 0), c);
      terms_ = std::move(t);
      vars_ = o.vars_;
      return;
    }
    if (!compatible(*this, o)) throw DomainError("mismatched variable contexts");
  }
  // Exponent of a term of `o` expressed in this context (only differs for context-free constants).
  Exponent widen(const Polynomial&, const Exponent& e) const {
    if (e.size() == nvars()) return e;
    return Exponent(nvars(), 0);
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = detail::coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }

  VarsPtr vars_;
  Terms terms_;
};

using QPoly = Polynomial<Rational>;
using KPoly = Polynomial<AlgebraicNumber>;

KPoly to_algebraic(const QPoly& p);

// --- Algorithms over Q ------------------------------------------------------

/// Positive rational c with p / c having coprime integer coefficients and a
/// positive lexicographically leading coefficient (sign folded into c).
Rational content(const QPoly& p);
QPoly primitive_part(const QPoly& p);

/// q with p = d * q; throws DomainError when d does not divide p.
QPoly exact_divide(const QPoly& p, const QPoly& d);
bool divides(const QPoly& d, const QPoly& p, QPoly* quotient = nullptr);

/// Greatest common divisor, primitive with positive lex-leading coefficient.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Resultant with respect to `var` by the subresultant PRS.
QPoly resultant(const QPoly& p, const QPoly& q, std::size_t var);
QPoly resultant(const QPoly& p, const QPoly& q, const std::string& var);

struct SquarefreeResult {
  QPoly part;
  bool is_squarefree = false;
  /// gcd(p, all partials); a unit at the origin exactly when p is locally reduced.
  QPoly repeated;
};
/// p / gcd(p, dp/dv for all v). The squarefree verdict is local at the
/// origin: factors that do not pass through 0 are units there.
SquarefreeResult squarefree_part(const QPoly& p);

/// Primitive integer form with positive coefficient on the first term of
/// lowest degree (local normalization).
QPoly local_normalize(const QPoly& p);

}  // namespace wcurve
