#pragma once

// Exact linear algebra over fields (Rational, F_p): incremental sparse echelon
// bases, dense row reduction with several right-hand sides, and modular rank
// with connected-component splitting.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bicov/scalar.hpp"

namespace bicov {

template <class F, class K = std::uint64_t>
using SparseVec = std::vector<std::pair<K, F>>;

/// Sorts by key, merges duplicates, drops zeros.
template <class F, class K>
void canonicalize(SparseVec<F, K>& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec<F, K> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second = out.back().second + e.second;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  v = std::move(out);
}

/// v - c * w for sorted sparse vectors.
template <class F, class K>
SparseVec<F, K> axpy_sub(const SparseVec<F, K>& v, const F& c, const SparseVec<F, K>& w) {
  SparseVec<F, K> out;
  out.reserve(v.size() + w.size());
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() || j != w.end()) {
    if (j == w.end() || (i != v.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == v.end() || j->first < i->first) {
      F x = -(c * j->second);
      if (!is_zero(x)) out.emplace_back(j->first, std::move(x));
      ++j;
    } else {
      F x = i->second - c * j->second;
      if (!is_zero(x)) out.emplace_back(i->first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Row-echelon basis of a growing subspace; rows are keyed by their leading key.
template <class F, class K = std::uint64_t>
class Echelon {
 public:
  /// Reduces v against the basis; the result is zero iff v is in the span.
  SparseVec<F, K> reduce(SparseVec<F, K> v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) return v;
      F lead = v.front().second;
      v = axpy_sub(v, lead, it->second);
    }
    return v;
  }

  bool contains(const SparseVec<F, K>& v) const { return reduce(v).empty(); }

  /// Reduces every entry of v, not only the leading one.
  SparseVec<F, K> normal_form(SparseVec<F, K> v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      auto it = rows_.find(v[i].first);
      if (it == rows_.end()) {
        ++i;
        continue;
      }
      F c = v[i].second;
      v = axpy_sub(v, c, it->second);
    }
    return v;
  }

  /// Adds v; returns true if it enlarged the span.
  bool insert(SparseVec<F, K> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    F inv = from_int<F>(1) / v.front().second;
    for (auto& e : v) e.second = e.second * inv;
    K lead = v.front().first;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<K, SparseVec<F, K>>& rows() const { return rows_; }

 private:
  std::map<K, SparseVec<F, K>> rows_;
};

template <class F, class K>
std::size_t sparse_rank(const std::vector<SparseVec<F, K>>& rows) {
  Echelon<F, K> e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Rank after splitting the column graph into connected components; each
/// component is eliminated independently.
template <class F>
std::size_t component_rank(const std::vector<SparseVec<F, std::uint64_t>>& rows) {
  std::unordered_map<std::uint64_t, std::uint64_t> parent;
  auto find = [&](std::uint64_t x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent.emplace(x, x);
      return x;
    }
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& r : rows) {
    if (r.empty()) continue;
    std::uint64_t root = find(r.front().first);
    for (const auto& e : r) {
      std::uint64_t other = find(e.first);
      if (other != root) parent[other] = root;
    }
  }
  std::unordered_map<std::uint64_t, Echelon<F, std::uint64_t>> blocks;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    blocks[find(r.front().first)].insert(r);
  }
  std::size_t total = 0;
  for (const auto& [root, e] : blocks) total += e.rank();
  return total;
}

/// Dense matrix over a field.
template <class F>
using Dense = std::vector<std::vector<F>>;

template <class F>
struct RowReduction {
  Dense<F> matrix;           // reduced row echelon form of [A | B]
  std::vector<int> pivots;   // pivot columns (< unknowns)
  int unknowns = 0;
  bool consistent = true;    // no pivot in the right-hand-side block
  int rank() const { return static_cast<int>(pivots.size()); }
  int nullity() const { return unknowns - rank(); }
};

/// Reduced row echelon form of [A | B] where A has `unknowns` columns.
template <class F>
RowReduction<F> row_reduce(Dense<F> m, int unknowns) {
  RowReduction<F> out;
  out.unknowns = unknowns;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : unknowns;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (c >= unknowns) {
      out.consistent = false;
      std::swap(m[piv], m[r]);
      ++r;
      break;
    }
    std::swap(m[piv], m[r]);
    F inv = from_int<F>(1) / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (!is_zero(m[r][k])) m[i][k] = m[i][k] - f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

/// Particular solution (free unknowns set to 0) for right-hand-side column `rhs`.
template <class F>
std::vector<F> particular_solution(const RowReduction<F>& rr, int rhs) {
  std::vector<F> x(rr.unknowns, from_int<F>(0));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.matrix[i][rr.unknowns + rhs];
  return x;
}

/// Row-space equality of two sets of sparse rows.
template <class F, class K>
bool same_span(const std::vector<SparseVec<F, K>>& a, const std::vector<SparseVec<F, K>>& b) {
  Echelon<F, K> ea, eb;
  for (const auto& r : a) ea.insert(r);
  for (const auto& r : b) eb.insert(r);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& r : b)
    if (!ea.contains(r)) return false;
  return true;
}

}  // namespace bicov
