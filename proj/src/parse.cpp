#include "wcurve/parse.hpp"

#include <cctype>

namespace wcurve {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarsPtr& vars, int line, int offset)
      : s_(text), vars_(vars), line_(line), offset_(offset) {}

  QPoly run() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    QPoly p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos_) + 1, msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  QPoly expr() {
    QPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPoly term() {
    QPoly acc = signed_factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= signed_factor();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        QPoly d = signed_factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc = Rational(1 / d.constant_term()) * acc;
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  QPoly signed_factor() {
    if (peek('-')) {
      ++pos_;
      return -signed_factor();
    }
    if (peek('+')) {
      ++pos_;
      return signed_factor();
    }
    return power();
  }

  QPoly power() {
    QPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  QPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QPoly::constant(vars_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_run();
    fail(std::string("unexpected '") + c + "'");
  }

  // One declared variable, longest name first, so that "xy" reads as x*y.
  QPoly variable_run() {
    std::size_t best = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      const std::string& v = (*vars_)[i];
      if (v.size() > best_len && s_.compare(pos_, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    if (best_len == 0) {
      std::size_t stop = pos_;
      while (stop < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[stop])) || s_[stop] == '_')) ++stop;
      fail("unknown variable '" + s_.substr(pos_, stop - pos_) + "'");
    }
    pos_ += best_len;
    return QPoly::variable(vars_, best);
  }

  const std::string& s_;
  VarsPtr vars_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_polynomial(const std::string& text, const VarsPtr& vars, int line, int column_offset) {
  return Parser(text, vars, line, column_offset).run();
}

}  // namespace wcurve
