#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wcurve/germ.hpp"
#include "wcurve/localalg.hpp"
#include "wcurve/puiseux.hpp"

namespace wcurve {

/// alpha[i][0], alpha[i][1] in the variables (x, y, x', y') with
/// f_i(x,y) - f_i(x',y') = alpha[i][0]*(x - x') + alpha[i][1]*(y - y').
struct DividedDifferences {
  VarsPtr vars;
  std::array<std::array<QPoly, 2>, 3> alpha;
};

/// Context (x, y, x', y') built from the names of a two-variable context.
VarsPtr doubled_context(const VarsPtr& vars);

DividedDifferences divided_differences(const std::array<QPoly, 3>& f);
DividedDifferences divided_differences(const GermMap& g);

/// f_i(x,y) - f_i(x',y') for i = 1..3, then the 2x2 minors of alpha.
std::vector<QPoly> lifting_ideal(const std::array<QPoly, 3>& f);
std::vector<QPoly> lifting_ideal(const GermMap& g);

/// Defining equation of D(f) in the normal coordinates of g, primitive and
/// locally normalized. A nonzero constant for immersions (D(f) empty).
QPoly double_point_curve(const GermMap& g);

struct FdVerdict {
  bool finitely_determined = false;
  bool empty = false;  // D(f) is empty (immersion)
  QPoly lambda;
  /// Milnor number of D(f) when finitely determined.
  ExtNat mu;
  /// gcd(lambda, lambda_x, lambda_y) when lambda is not reduced.
  std::optional<QPoly> repeated;
};
FdVerdict is_finitely_determined(const GermMap& g);

enum class ComponentKind { IDENTIFICATION, FOLD };
std::string to_string(ComponentKind k);

struct Component {
  PuiseuxBranch branch;
  SpaceBranch image;
  ComponentKind kind = ComponentKind::FOLD;
  int partner = -1;
  int image_multiplicity = 0;
};

struct DoublePointData {
  QPoly lambda;
  FieldPtr field;
  std::vector<Component> components;
  int r_i = 0, r_f = 0;
  /// m(f(D(f))): identification pairs counted once, plus folds.
  long image_multiplicity_total = 0;
};

DoublePointData classify_components(const GermMap& g, const QPoly& lambda);

}  // namespace wcurve
