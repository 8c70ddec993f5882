#include "wcurve/rational.hpp"

#include "wcurve/errors.hpp"

namespace wcurve {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace wcurve
