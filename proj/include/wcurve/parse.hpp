#pragma once

#include <string>

#include "wcurve/polynomial.hpp"

namespace wcurve {

/// Parses a polynomial over Q in the given variables.
///
/// Grammar: sums and differences of products; `*` may be omitted, `^` takes a
/// nonnegative integer, `/` divides by a nonzero constant. A run of letters
/// such as `xy` is split into declared variable names, longest name first.
/// Errors carry `line` and the 1-based column (`column_offset` is added).
QPoly parse_polynomial(const std::string& text, const VarsPtr& vars, int line = 1, int column_offset = 0);

}  // namespace wcurve
