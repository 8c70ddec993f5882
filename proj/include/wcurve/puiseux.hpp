#pragma once

#include <array>
#include <vector>

#include "wcurve/localalg.hpp"
#include "wcurve/number_field.hpp"
#include "wcurve/polynomial.hpp"
#include "wcurve/series.hpp"

namespace wcurve {

using KSeries = TruncatedSeries<AlgebraicNumber>;

/// Projective point (a : b), scaled so that the first nonzero entry is 1.
struct Direction {
  AlgebraicNumber a, b;
  friend bool operator==(const Direction& p, const Direction& q) { return p.a == q.a && p.b == q.b; }
};
Direction make_direction(const AlgebraicNumber& a, const AlgebraicNumber& b);
std::string to_string(const Direction& d);

/// One branch of a plane curve germ: x = x(u), y = y(u) with x(u) = lambda*u^e
/// a single term (or zero for the branch x = 0).
struct PuiseuxBranch {
  FieldPtr field;
  KSeries x, y;
  int multiplicity = 0;
  Direction tangent;
  int delta = 0;

  bool vertical() const { return x.is_exact_zero(); }
  /// Exponent e of x = lambda*u^e; 0 for the vertical branch.
  int x_exponent() const;
};

struct BranchDecomposition {
  /// Common coefficient field of all branches (null means Q).
  FieldPtr field;
  std::vector<PuiseuxBranch> branches;
  int precision = 0;
};

/// Newton-Puiseux decomposition at the origin of a locally reduced curve.
/// `precision` = 0 picks 2*mu + 2; the expansion is redone with a larger
/// precision whenever branches are not yet separated.
BranchDecomposition branch_decomposition(const QPoly& g, int precision = 0);

/// Distinct tangent lines of the lowest form of g.
struct TangentCone {
  FieldPtr field;
  std::vector<Direction> directions;
};
TangentCone tangent_directions(const QPoly& g);

/// Intersection multiplicity of two distinct branches (throws
/// PrecisionExhausted when the truncation cannot decide).
long branch_intersection(const PuiseuxBranch& a, const PuiseuxBranch& b);

/// delta invariant = sum of branch deltas + sum of pairwise intersections.
long delta_invariant(const BranchDecomposition& d);

/// Milnor number from branch data, mu = 2*delta - r + 1. Infinite for
/// non-reduced curves.
ExtNat milnor_via_branches(const QPoly& g);

/// Sum over branches b of g of ord_u h(b(u)); infinite when g and h share a
/// component through the origin.
ExtNat intersection_via_branches(const QPoly& g, const QPoly& h);

/// f composed with a branch, and its reparametrization in which the
/// lowest-order coordinate becomes a single monomial c*w^k.
struct SpaceBranch {
  std::array<KSeries, 3> composite;
  std::array<KSeries, 3> normalized;
  int coordinate = 0;
  int order = 0;
  /// gcd of k and every exponent seen in `normalized`. Certain when odd or
  /// when the composite is exact; otherwise only a multiple of the true degree.
  int primitive_degree = 1;
  bool degree_certain = false;
  /// order / primitive_degree.
  int image_multiplicity = 0;
  /// Coefficients of w^order, the tangent direction of the image branch.
  std::array<AlgebraicNumber, 3> tangent;
};

SpaceBranch image_parametrization(const std::array<QPoly, 3>& f, const PuiseuxBranch& b, int precision);

/// Whether two normalized image parametrizations can describe the same image
/// curve, i.e. n2(w) = n1(r*w) for some r, checked on all known terms. Never
/// rejects a true match.
bool same_image(const SpaceBranch& s1, const SpaceBranch& s2);

}  // namespace wcurve
