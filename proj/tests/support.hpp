#pragma once

#include <random>
#include <string>

#include "wcurve/parse.hpp"
#include "wcurve/polynomial.hpp"

namespace wtest {

using namespace wcurve;

inline const VarsPtr& xy() {
  static const VarsPtr v = make_vars({"x", "y"});
  return v;
}

inline QPoly P(const std::string& s, const VarsPtr& vars = xy()) { return parse_polynomial(s, vars); }

/// Small random polynomial with integer coefficients in [-c, c].
inline QPoly random_poly(std::mt19937_64& rng, const VarsPtr& vars, int max_deg, int terms, int c = 5,
                         int min_deg = 0) {
  std::uniform_int_distribution<int> coef(-c, c);
  QPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars->size(), 0);
    int budget = std::uniform_int_distribution<int>(min_deg, max_deg)(rng);
    for (std::size_t i = 0; i + 1 < e.size() && budget > 0; ++i) {
      const int k = std::uniform_int_distribution<int>(0, budget)(rng);
      e[i] = static_cast<std::uint32_t>(k);
      budget -= k;
    }
    e.back() += static_cast<std::uint32_t>(budget);
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace wtest
