#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcurve/sliceinv.hpp"

namespace wcurve {

/// F(x, y, t) = (f_t(x, y), t) with f_t(0) = 0 for every t.
struct UnfoldingFamily {
  std::array<QPoly, 3> F;  // in the variables (x, y, t)
  VarsPtr source_vars;     // (x, y)
};

/// Checks three variables and F_i(0, 0, t) = 0 identically.
UnfoldingFamily make_family(std::array<QPoly, 3> F);

/// f_{t0}; throws when it is unsupported or not finitely determined.
GermMap specialize(const UnfoldingFamily& F, const Rational& t0);

enum class Verdict { EQUISINGULAR_AT_SAMPLES, NOT_EQUISINGULAR, INDETERMINATE };
std::string to_string(Verdict v);

struct Sample {
  Rational t;
  InvariantReport report;
};

struct RejectedSample {
  Rational t;
  std::string reason;
};

struct VerdictTable {
  std::vector<Sample> samples;  // t = 0 first, then increasing t
  std::vector<RejectedSample> rejected;
  Verdict verdict = Verdict::INDETERMINATE;
  /// Constituent of mu(W) = mu(D) + mu(gamma) + 4 m(f(D)) - 1 that moved.
  std::optional<std::string> failing_invariant;
  std::vector<std::string> semicontinuity_violations;

  bool identity_checks_passed() const;
};

/// Profiles f_0 and `sample_count` seeded nonzero rationals t and compares mu(W).
VerdictTable whitney_verdict(const UnfoldingFamily& F, int sample_count, std::uint64_t seed);

}  // namespace wcurve
