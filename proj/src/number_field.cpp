#include "wcurve/number_field.hpp"

#include <sstream>

#include "wcurve/factor.hpp"

namespace wcurve {

FieldPtr NumberField::create(const UPoly<Rational>& minimal_polynomial, std::string generator) {
  if (minimal_polynomial.degree() < 1) throw DomainError("minimal polynomial must have positive degree");
  if (minimal_polynomial.leading() != 1) throw DomainError("minimal polynomial must be monic");
  if (!is_irreducible(minimal_polynomial))
    throw DomainError("minimal polynomial is reducible over Q: " + minimal_polynomial.to_string());
  return FieldPtr(new NumberField(minimal_polynomial, std::move(generator)));
}

void NumberField::reduce(std::vector<Rational>& c) const {
  const int n = degree();
  const auto& m = minpoly_.coeffs();
  for (int k = static_cast<int>(c.size()) - 1; k >= n; --k) {
    const Rational lead = c[static_cast<std::size_t>(k)];
    if (sgn(lead) == 0) continue;
    for (int j = 0; j < n; ++j)
      c[static_cast<std::size_t>(k - n + j)] -= lead * m[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(k)] = 0;
  }
  if (static_cast<int>(c.size()) > n) c.resize(static_cast<std::size_t>(n));
}

std::string NumberField::describe() const {
  return "Q(" + generator_ + "), " + minpoly_.to_string(generator_) + " = 0";
}

AlgebraicNumber::AlgebraicNumber(const Rational& r) {
  if (sgn(r) != 0) c_.push_back(r);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (field_) field_->reduce(c_);
  trim();
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
  return AlgebraicNumber(field, {Rational(0), Rational(1)});
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

void AlgebraicNumber::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

FieldPtr AlgebraicNumber::common_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (a.is_rational()) return b.field_;
  if (b.is_rational()) return a.field_;
  throw std::logic_error("arithmetic between elements of different number fields");
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r;
  r.field_ = AlgebraicNumber::common_field(a, b);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r;
  r.field_ = AlgebraicNumber::common_field(a, b);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const auto& s = a.c_.size() == 1 ? a : b;
    const auto& v = a.c_.size() == 1 ? b : a;
    r.c_ = v.c_;
    for (auto& c : r.c_) c *= s.c_[0];
    return r;
  }
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  if (r.field_) r.field_->reduce(r.c_);
  r.trim();
  return r;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (c_.empty()) throw DomainError("division by zero in number field");
  if (c_.size() == 1) {
    AlgebraicNumber r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  auto eg = extended_gcd(UPoly<Rational>(c_), field_->minimal_polynomial());
  if (eg.g.degree() != 0) throw DomainError("non-invertible element: minimal polynomial is reducible");
  return AlgebraicNumber(field_, eg.s.coeffs());
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.c_.size() > 1 && a.field_ != b.field_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

AlgebraicNumber AlgebraicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraicNumber result(1);
  result.field_ = field_;
  AlgebraicNumber base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string AlgebraicNumber::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return wcurve::to_string(c_[0]);
  const std::string g = field_ ? field_->generator_name() : "a";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Rational c = c_[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && i > 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << g;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly<AlgebraicNumber> lift_coefficients(const UPoly<Rational>& p) {
  std::vector<AlgebraicNumber> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return UPoly<AlgebraicNumber>(std::move(v));
}

}  // namespace wcurve
