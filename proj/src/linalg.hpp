#pragma once

// Small exact linear algebra over Q for the polytope code. Matrices are
// row-major vectors of rows; sizes stay below ~10 so nothing here is clever.

#include "toric/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric::linalg {

using RationalMatrix = std::vector<RationalVector>;
using IntMatrix = std::vector<IntVector>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

// Solves a x = b for square a. Empty when a is singular.
inline std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n, Rational(0));
    e[j] = 1;
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

inline RationalVector mul(const RationalMatrix& a, const RationalVector& x) {
  RationalVector y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix t(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <typename U, typename V>
Rational dot(const U& x, const V& y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += Rational(x[i]) * Rational(y[i]);
  return acc;
}

}  // namespace toric::linalg
