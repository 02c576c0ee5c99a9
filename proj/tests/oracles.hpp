#pragma once

// Brute-force reference computations used as independent oracles. Nothing
// here calls the library's cone or lattice algorithms; everything is plain
// Gaussian elimination over the rationals and exhaustive enumeration.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "f1cones/lattice.hpp"

namespace oracle {

using f1cones::Integer;
using f1cones::IntVec;
using f1cones::Rational;

/// Solve A x = b (A given by columns) over Q; nullopt if inconsistent.
/// Columns are assumed linearly independent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<IntVec>& cols, const IntVec& b) {
  const std::size_t n = b.size(), k = cols.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(cols[j][i]);
    a[i][k] = Rational(b[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;  // dependent columns
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  if (pivots.size() < k) return std::nullopt;
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][pivots[i]];
  return x;
}

inline std::size_t rank(const std::vector<IntVec>& vs, std::size_t dim) {
  std::vector<std::vector<Rational>> a;
  for (const auto& v : vs) {
    std::vector<Rational> r;
    for (const auto& x : v) r.emplace_back(x);
    a.push_back(r);
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[row][c];
      for (std::size_t j = c; j < dim; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

/// Membership in cone(gens) by Caratheodory: x lies in the cone of some
/// linearly independent subset of the generators with nonnegative weights.
inline bool in_generated_cone(const std::vector<IntVec>& gens, const IntVec& x) {
  bool zero = true;
  for (const auto& c : x) zero = zero && c == 0;
  if (zero) return true;
  const std::size_t m = gens.size();
  const std::size_t d = x.size();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!pick.empty()) {
      std::vector<IntVec> cols;
      for (auto i : pick) cols.push_back(gens[i]);
      if (rank(cols, d) == cols.size()) {
        auto sol = solve_columns(cols, x);
        if (sol) {
          bool ok = true;
          for (const auto& s : *sol) ok = ok && s >= 0;
          if (ok) return true;
        }
      } else {
        return false;
      }
    }
    if (pick.size() == d) return false;
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// All integer points of the box [-r, r]^d.
inline std::vector<IntVec> box(std::size_t d, long r) {
  std::vector<IntVec> out;
  IntVec cur(d, Integer(-r));
  if (d == 0) return {IntVec{}};
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (cur[i] < r) {
        cur[i] += 1;
        break;
      }
      cur[i] = -r;
    }
    if (i == d) break;
  }
  return out;
}

/// Is x a nonnegative integer combination of basis (all in a pointed cone
/// with linear functional weight > 0 on nonzero elements)?
inline bool representable(const std::vector<IntVec>& basis, const IntVec& x, const IntVec& weight,
                          std::map<IntVec, bool>& memo) {
  bool zero = true;
  for (const auto& c : x) zero = zero && c == 0;
  if (zero) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  Integer wx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) wx += weight[i] * x[i];
  bool ok = false;
  if (wx > 0) {
    for (const auto& h : basis) {
      Integer wh = 0;
      for (std::size_t i = 0; i < h.size(); ++i) wh += weight[i] * h[i];
      if (wh <= 0 || wh > wx) continue;
      IntVec y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= h[i];
      if (representable(basis, y, weight, memo)) {
        ok = true;
        break;
      }
    }
  }
  memo[x] = ok;
  return ok;
}

inline IntVec random_vec(std::mt19937& rng, std::size_t d, int r) {
  std::uniform_int_distribution<int> dist(-r, r);
  IntVec v(d);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace oracle
