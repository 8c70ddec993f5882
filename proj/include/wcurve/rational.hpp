#pragma once

#include <gmpxx.h>

#include <string>

namespace wcurve {

/// Exact rational number. GMP keeps results of arithmetic in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace wcurve
