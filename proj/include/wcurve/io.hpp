#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wcurve/family.hpp"

namespace wcurve {

inline constexpr int kSchemaVersion = 1;

struct GermFile {
  enum class Kind { GERM, UNFOLDING };
  Kind kind = Kind::GERM;
  std::string name;
  VarsPtr vars;
  std::array<QPoly, 3> f;
};

/// Line-oriented germ format:
///   germ | unfolding
///   vars x y [t]
///   f1 = <poly>   f2 = <poly>   f3 = <poly>
/// with `#` comments. Errors are ParseError with line and column.
GermFile parse_germ_file(const std::string& text, const std::string& name = "");
GermFile read_germ_file(const std::string& path);

std::string report_json(const std::string& name, const InvariantReport& r, std::uint64_t seed);
std::string report_text(const std::string& name, const InvariantReport& r, std::uint64_t seed);

std::string verdict_json(const std::string& name, const VerdictTable& t, std::uint64_t seed);
std::string verdict_text(const std::string& name, const VerdictTable& t, std::uint64_t seed);

std::string fd_json(const std::string& name, const GermMap& g, const FdVerdict& v);
std::string fd_text(const std::string& name, const GermMap& g, const FdVerdict& v);

}  // namespace wcurve
