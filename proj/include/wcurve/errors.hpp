#pragma once

#include <stdexcept>
#include <string>

namespace wcurve {

/// Germ file or polynomial text could not be parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Germ lies outside the supported input classes (corank 1 with a linear
/// coordinate, or double fold).
class UnsupportedGerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standing hypothesis violated: not finitely determined, not generically
/// one-to-one, not origin preserving, ...
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-backed identity failed. Always an implementation bug or a
/// certificate that was too weak.
class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated series was asked for information beyond its known precision.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematical domain error: zero polynomial where nonzero required,
/// mismatched contexts, unknown variable, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wcurve
