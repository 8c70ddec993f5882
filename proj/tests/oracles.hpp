#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wcurve/polynomial.hpp"

namespace wtest {

using namespace wcurve;

// dim Q[x,y]/(I + m^N) by row reduction modulo a 61-bit prime. The sequence is
// nondecreasing in N; two equal consecutive values force m^N inside I, so the
// stable value is the local colength. nullopt when no stabilization happens
// below max_n.
inline std::optional<long> brute_colength(const std::vector<QPoly>& gens, int max_n = 40) {
  using u64 = std::uint64_t;
  const u64 p = (u64(1) << 61) - 1;
  auto mul = [&](u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); };
  auto pw = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  auto red = [&](const Rational& q) {
    Integer n = q.get_num() % Integer(std::to_string(p));
    if (n < 0) n += Integer(std::to_string(p));
    Integer d = q.get_den() % Integer(std::to_string(p));
    return mul(std::stoull(n.get_str()), pw(std::stoull(d.get_str()), p - 2));
  };
  for (const auto& g : gens)
    if (sgn(g.constant_term()) != 0) return 0;
  std::optional<long> prev;
  for (int N = 1; N <= max_n; ++N) {
    auto col = [&](int a, int b) { return (a + b) * (a + b + 1) / 2 + b; };
    const int ncols = N * (N + 1) / 2;
    std::vector<std::vector<u64>> rows;
    for (const auto& g : gens)
      for (int d = 0; d < N; ++d)
        for (int a = 0; a <= d; ++a) {
          std::vector<u64> row(static_cast<std::size_t>(ncols), 0);
          bool any = false;
          for (const auto& [e, c] : g.terms()) {
            const int ea = static_cast<int>(e[0]) + a, eb = static_cast<int>(e[1]) + d - a;
            if (ea + eb >= N) continue;
            row[static_cast<std::size_t>(col(ea, eb))] = red(c);
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
    long rank = 0;
    for (int c = 0; c < ncols && rank < static_cast<long>(rows.size()); ++c) {
      std::size_t piv = static_cast<std::size_t>(rank);
      while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
      auto& pr = rows[static_cast<std::size_t>(rank)];
      const u64 inv = pw(pr[static_cast<std::size_t>(c)], p - 2);
      for (auto& v : pr) v = mul(v, inv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == static_cast<std::size_t>(rank) || rows[r][static_cast<std::size_t>(c)] == 0) continue;
        const u64 f = rows[r][static_cast<std::size_t>(c)];
        for (int k = c; k < ncols; ++k)
          rows[r][static_cast<std::size_t>(k)] =
              (rows[r][static_cast<std::size_t>(k)] + p - mul(f, pr[static_cast<std::size_t>(k)])) % p;
      }
      ++rank;
    }
    const long cN = ncols - rank;
    if (prev && *prev == cN) return cN;
    prev = cN;
  }
  return std::nullopt;
}

// D(f) of a double fold (x^2, y^2, h) from the lifting ideal: its first two
// generators force x' = +-x and y' = +-y. For each non-diagonal sign choice the
// remaining generators restrict to polynomials in (x, y) whose gcd cuts out
// that piece of D(f); the curve is the product of the three gcds.
inline QPoly double_fold_by_elimination(const std::vector<QPoly>& lifting, const VarsPtr& vars) {
  QPoly product = QPoly::constant(vars, Rational(1));
  const int signs[3][2] = {{-1, 1}, {1, -1}, {-1, -1}};
  for (const auto& s : signs) {
    QPoly g(vars);
    for (const auto& gen : lifting) {
      const VarsPtr& v4 = gen.vars();
      QPoly r = gen.substitute(2, QPoly::constant(v4, Rational(s[0])) * QPoly::variable(v4, 0));
      r = r.substitute(3, QPoly::constant(v4, Rational(s[1])) * QPoly::variable(v4, 1));
      QPoly down(vars);
      for (const auto& [e, c] : r.terms()) down.add_term(Exponent{e[0], e[1]}, c);
      g = g.is_zero() ? down : gcd(g, down);
    }
    product = product * g;
  }
  return product;
}

}  // namespace wtest
