#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wcurve/rational.hpp"
#include "wcurve/upoly.hpp"

namespace wcurve {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Simple algebraic extension Q(a) = Q[z]/(m(z)).
///
/// The minimal polynomial is checked to be monic and irreducible over Q when
/// the field is created.
class NumberField {
 public:
  static FieldPtr create(const UPoly<Rational>& minimal_polynomial, std::string generator = "a");

  const UPoly<Rational>& minimal_polynomial() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const std::string& generator_name() const { return generator_; }

  /// Reduces a coefficient vector (power basis, any length) modulo the
  /// minimal polynomial.
  void reduce(std::vector<Rational>& coeffs) const;

  std::string describe() const;

 private:
  NumberField(UPoly<Rational> m, std::string g) : minpoly_(std::move(m)), generator_(std::move(g)) {}

  UPoly<Rational> minpoly_;
  std::string generator_;
};

/// Element of a NumberField, or a plain rational when no field is attached.
///
/// Rational elements combine freely with elements of any field. Mixing two
/// distinct fields is a logic error.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(int v) : AlgebraicNumber(Rational(v)) {}  // NOLINT(implicit)
  AlgebraicNumber(const Rational& r);                       // NOLINT(implicit)
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs);

  static AlgebraicNumber generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  /// Power-basis coefficients, trailing zeros removed.
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }
  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }

  AlgebraicNumber inverse() const;
  /// Integer power; negative exponents invert.
  AlgebraicNumber pow(long e) const;

  std::string to_string() const;

 private:
  void trim();
  static FieldPtr common_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

  FieldPtr field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
inline std::string to_string(const AlgebraicNumber& a) { return a.to_string(); }

/// Maps a rational polynomial to one with algebraic coefficients.
UPoly<AlgebraicNumber> lift_coefficients(const UPoly<Rational>& p);

}  // namespace wcurve
