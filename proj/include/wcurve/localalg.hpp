#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcurve/polynomial.hpp"

namespace wcurve {

/// A natural number or infinity.
using ExtNat = std::optional<long>;
std::string to_string(const ExtNat& n);

/// Ideal of the local ring Q[x,y]_(x,y) given by generators in two variables.
///
/// The local ordering compares total degree first (lower degree is larger),
/// then the exponent of the first variable (larger is larger).
struct LocalIdeal {
  std::vector<QPoly> generators;

  /// A generator that does not vanish at the origin makes the ideal the whole ring.
  bool has_unit() const;
};

struct ColengthResult {
  ExtNat value;
  /// Monomials outside the leading ideal, when finite.
  std::vector<Exponent> standard_monomials;

  bool is_infinite() const { return !value.has_value(); }
};

/// Mora standard basis for the local ordering.
std::vector<QPoly> standard_basis(const LocalIdeal& ideal);

ColengthResult colength(const LocalIdeal& ideal);

/// Colength of the Jacobian ideal. Rejects g with g(0) != 0 or g = 0.
ExtNat milnor_number(const QPoly& g);

/// Colength of (g1, g2); infinite exactly when they share a component through 0.
ExtNat intersection_multiplicity(const QPoly& g1, const QPoly& g2);

}  // namespace wcurve
