#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcurve/doublepoint.hpp"

namespace wcurve {

using LineCoefficients = std::array<Rational, 3>;

struct LineRejection {
  LineCoefficients coefficients;
  std::string reason;
};

/// l(X,Y,Z) = a*X + b*Y + c*Z in the normal target coordinates of the germ.
struct GenericLine {
  LineCoefficients coefficients;
  std::uint64_t seed = 0;
  std::vector<std::string> certificate;
  std::vector<LineRejection> rejected;
};

/// First failing genericity condition for l, or nullopt when l passes all of
/// them. On success `certificate` (if given) receives the checks passed.
std::optional<std::string> line_defect(const GermMap& g, const DoublePointData& dp, const LineCoefficients& l,
                                       std::vector<std::string>* certificate = nullptr);

/// Deterministic draws from [-9,9]^3 \ {0} until one passes line_defect.
GenericLine choose_generic_line(const GermMap& g, const DoublePointData& dp, std::uint64_t seed);

/// l o f, the equation of the slice preimage.
QPoly source_slice(const GermMap& g, const LineCoefficients& l);

/// lambda * (l o f); throws PreconditionViolation on a common component.
QPoly W_curve(const QPoly& lambda, const QPoly& slice);

enum class CheckStatus { PASS, FAIL, NOT_APPLICABLE };
std::string to_string(CheckStatus s);

struct IdentityCheck {
  std::string name;
  std::string relation;  // "=", "<="
  long lhs = 0, rhs = 0;
  CheckStatus status = CheckStatus::NOT_APPLICABLE;
  std::string note;
};

struct ComponentSummary {
  ComponentKind kind;
  int partner = -1;
  int multiplicity = 0;
  int image_multiplicity = 0;
  std::string x, y;  // leading terms of the parametrization
};

struct InvariantReport {
  GermMap germ;
  QPoly lambda;
  bool d_empty = false;
  /// Field of the branch coefficients, "Q" when rational.
  std::string field = "Q";
  GenericLine line;
  QPoly slice;
  QPoly W;
  long mu_D = 0, mu_gamma = 0, mu_W = 0, mu_W_formula = 0;
  long m_D = 0, m_gamma = 0, m_fD = 0;
  long i_D_gamma = 0, i_D_gamma_branches = 0;
  int r_i = 0, r_f = 0;
  bool tangent_cones_disjoint = false;
  std::optional<ExtNat> e_D;
  std::optional<LineCoefficients> e_D_projection;
  std::vector<ComponentSummary> components;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  const IdentityCheck* check(const std::string& name) const;
};

/// All invariants of a finitely determined, supported germ together with the
/// identity checks between them.
InvariantReport invariant_profile(const GermMap& g, std::uint64_t seed, bool with_e_D = false);

/// colength of <lambda, det Jacobian(lambda, p o f)> for a certified generic
/// projection p; `projection` receives p.
ExtNat e_D(const GermMap& g, const DoublePointData& dp, std::uint64_t seed, LineCoefficients* projection = nullptr);

}  // namespace wcurve
