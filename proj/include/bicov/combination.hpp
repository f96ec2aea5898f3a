#pragma once

// Solving  sum_k x_k * column_k = rhs  where the columns are rational sparse
// vectors and the right-hand side lives in an arbitrary ring S (typically
// MPoly). Only rational row operations are needed, so S need not be a field.

#include <map>
#include <optional>
#include <vector>

#include "bicov/linalg.hpp"

namespace bicov {

template <class Key>
using RationalColumn = std::map<Key, Rational>;

template <class S, class Key>
struct CombinationResult {
  std::vector<S> coefficients;      // free columns set to 0
  std::vector<int> free_columns;
  std::map<Key, S> residual;        // rhs - A x, zero entries dropped
  bool exact() const { return residual.empty(); }
};

template <class S, class Key>
CombinationResult<S, Key> solve_combination(const std::vector<RationalColumn<Key>>& columns,
                                            const std::map<Key, S>& rhs) {
  const int n = static_cast<int>(columns.size());
  std::map<Key, std::vector<Rational>> rows;
  for (int c = 0; c < n; ++c)
    for (const auto& [k, v] : columns[c]) {
      auto& row = rows.try_emplace(k, std::vector<Rational>(n)).first->second;
      row[c] = v;
    }
  // Independent rows, chosen greedily in key order.
  Echelon<Rational, std::uint64_t> basis;
  std::vector<Key> chosen;
  for (const auto& [k, row] : rows) {
    SparseVec<Rational, std::uint64_t> v;
    for (int c = 0; c < n; ++c)
      if (!is_zero(row[c])) v.emplace_back(static_cast<std::uint64_t>(c), row[c]);
    if (basis.insert(v)) chosen.push_back(k);
    if (static_cast<int>(chosen.size()) == n) break;
  }
  const int m = static_cast<int>(chosen.size());
  Dense<Rational> aug(m, std::vector<Rational>(n + m));
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < n; ++c) aug[i][c] = rows[chosen[i]][c];
    aug[i][n + i] = 1;
  }
  auto rr = row_reduce(aug, n);
  CombinationResult<S, Key> out;
  out.coefficients.assign(n, from_int<S>(0));
  std::vector<bool> pivot(n, false);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    int col = rr.pivots[i];
    pivot[col] = true;
    S acc = from_int<S>(0);
    for (int j = 0; j < m; ++j) {
      const Rational& t = rr.matrix[i][n + j];
      if (is_zero(t)) continue;
      auto it = rhs.find(chosen[j]);
      if (it != rhs.end()) acc = acc + from_rational<S>(t) * it->second;
    }
    out.coefficients[col] = acc;
  }
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) out.free_columns.push_back(c);
  std::map<Key, S> res = rhs;
  for (int c = 0; c < n; ++c) {
    if (is_zero(out.coefficients[c])) continue;
    for (const auto& [k, v] : columns[c]) {
      auto it = res.try_emplace(k, from_int<S>(0)).first;
      it->second = it->second - from_rational<S>(v) * out.coefficients[c];
    }
  }
  for (auto& [k, v] : res)
    if (!is_zero(v)) out.residual.emplace(k, v);
  return out;
}

}  // namespace bicov
