#pragma once

#include <array>
#include <string>

#include "wcurve/polynomial.hpp"

namespace wcurve {

enum class GermClass { IMMERSION, CORANK1, DOUBLE_FOLD, UNSUPPORTED };
std::string to_string(GermClass c);

/// Polynomial map germ (C^2, 0) -> (C^3, 0).
struct GermMap {
  std::array<QPoly, 3> f;
  int corank = 0;
  GermClass input_class = GermClass::UNSUPPORTED;
  /// Coordinates used by all later computations. Corank 1: (x, p, q) with p, q
  /// free of linear terms. Double fold: (x^2, y^2, h). Otherwise a copy of f.
  std::array<QPoly, 3> normal;
  /// Linear coordinate changes that turn f into `normal`; empty when none.
  std::string normalization;
  /// Why the germ is UNSUPPORTED.
  std::string reason;

  const VarsPtr& vars() const { return f[0].vars(); }
};

/// Validates f(0) = 0, computes the corank and the normal form.
GermMap make_germ(std::array<QPoly, 3> f);

}  // namespace wcurve
