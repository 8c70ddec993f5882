#pragma once

#include <utility>
#include <vector>

#include "wcurve/number_field.hpp"
#include "wcurve/rational.hpp"
#include "wcurve/upoly.hpp"

namespace wcurve {

template <class C>
using Factorization = std::vector<std::pair<UPoly<C>, int>>;

/// Monic irreducible factors over Q with multiplicities (Zassenhaus: Berlekamp
/// style splitting modulo a prime, Hensel lifting, subset recombination).
/// Constants factor to the empty list.
Factorization<Rational> factor_rational(const UPoly<Rational>& f);

bool is_irreducible(const UPoly<Rational>& f);

/// Monic irreducible factors over K (Trager's norm method). A null field means Q.
Factorization<AlgebraicNumber> factor_over(const FieldPtr& field, const UPoly<AlgebraicNumber>& f);

/// Norm over Q of h(z - k*a), where a generates the field of h's coefficients.
UPoly<Rational> shifted_norm(const FieldPtr& field, const UPoly<AlgebraicNumber>& h, long k);

/// A field containing both `field` and a root of the irreducible h.
/// Degree-one h returns `field` unchanged. The new field is built from a
/// primitive element, so elements of `field` are not carried over.
FieldPtr extend_with_root(const FieldPtr& field, const UPoly<AlgebraicNumber>& h);

/// Roots in K of f, with multiplicity, when f splits into linear factors
/// over K. Otherwise returns an irreducible factor of degree > 1 in `obstruction`.
struct SplitResult {
  std::vector<std::pair<AlgebraicNumber, int>> roots;
  UPoly<AlgebraicNumber> obstruction;
  bool splits() const { return obstruction.is_zero(); }
};
SplitResult split_over(const FieldPtr& field, const UPoly<AlgebraicNumber>& f);

UPoly<Rational> to_rational_poly(const UPoly<AlgebraicNumber>& p);

}  // namespace wcurve
