#pragma once

// Quadratic relation sets among the quantum 1-forms, stored as coefficient
// rows over the N^4-dimensional space of ordered words Omega^{i1}_{j1} Omega^{i2}_{j2},
// plus modular span comparison and PBW dimension probes.

#include <cstdint>
#include <string>
#include <vector>

#include "bicov/linalg.hpp"
#include "bicov/modp.hpp"
#include "bicov/rmatrix.hpp"

namespace bicov {

struct RelationSet {
  std::string name;
  int n = 0;
  /// entry ((i1,j1),(i2,j2)) = coefficient of Omega^{i1}_{j1} Omega^{i2}_{j2}
  std::vector<QTensor> rows;
};

/// P(+)W'RW'P(+), P(-)W'RW'P(-), P(0)W'RW'P(0), projectors taken as numerators.
RelationSet relations_woronowicz(const RMatrixData& rm);
/// P(0)W'RW'P(+) and P(+)W'RW'P(0).
RelationSet relations_rel1(const RMatrixData& rm);
/// The single five-term relation, multiplied by mu.
RelationSet relations_unique(const RMatrixData& rm);
/// The reduced three-term relation, multiplied by mu.
RelationSet relations_watamura(const RMatrixData& rm);
/// q X(++) + X(--)/q - (q mu+^2 + mu-^2/q)/(q+1/q)^2 X(00) with X(00) = K W'RW' K,
/// times (q+1/q)^2 mu^2. Equals (q+1/q) mu times relations_unique.
RelationSet relations_weighted_sum(const RMatrixData& rm);

RelationSet merge(const RelationSet& a, const RelationSet& b, std::string name);

/// Row i of a is a Laurent multiple of row i of b (one common factor per set).
bool proportional(const RelationSet& a, const RelationSet& b);

/// "((i1,j1),(i2,j2)) -> laurent" lines, one block per relation, "# relation k" headers.
std::string export_relations(const RelationSet& s);

/// Rejects q0 = 0 and zeros of mu or q + 1/q.
void check_sample(const RMatrixData& rm, const Rational& q0);

template <std::uint64_t P>
std::vector<SparseVec<Fp<P>>> rows_mod_p(const RelationSet& s, const Rational& q0) {
  const int n = s.n, v = n * n;
  std::vector<SparseVec<Fp<P>>> out;
  out.reserve(s.rows.size());
  for (const auto& row : s.rows) {
    SparseVec<Fp<P>> vec;
    for (const auto& [k, c] : row.entries()) {
      std::uint64_t x = key::row(k, 0) * n + key::col(k, 0);
      std::uint64_t y = key::row(k, 1) * n + key::col(k, 1);
      Fp<P> val = from_rational<Fp<P>>(c.evaluate_q(q0));
      if (!is_zero(val)) vec.emplace_back(x * v + y, val);
    }
    canonicalize(vec);
    if (!vec.empty()) out.push_back(std::move(vec));
  }
  return out;
}

struct SpanSample {
  Rational q;
  std::string prime;  // "A" or "B"
  std::size_t rank_a = 0, rank_b = 0, rank_union = 0;
  bool equal() const { return rank_a == rank_b && rank_b == rank_union; }
};

struct SpanReport {
  std::vector<SpanSample> samples;
  bool equal = false;   // at every sample
  bool stable = false;  // identical ranks at every sample
};

/// Row-space comparison at each q sample modulo both primes.
SpanReport span_equal(const RMatrixData& rm, const RelationSet& a, const RelationSet& b,
                      const std::vector<Rational>& q_samples);

struct PbwDims {
  std::size_t dim2 = 0, dim3 = 0;
  friend bool operator==(const PbwDims&, const PbwDims&) = default;
};

struct PbwReport {
  std::string relations;
  int max_degree = 2;
  std::vector<Rational> q_samples;
  std::vector<PbwDims> at_q;  // one per q sample (agreed between primes)
  PbwDims at_one;
  std::size_t classical2 = 0, classical3 = 0;  // C(N^2, 2), C(N^2, 3)
  std::size_t free2 = 0, free3 = 0;            // N^4, N^6
  bool primes_agree = true;
  bool stable = true;  // same dims at every q sample
  bool matches_q_one = false;
  bool matches_classical = false;  // q = 1 dims equal the exterior algebra counts
  std::string verdict;
};

/// Quotient dimensions in degree 2 (and 3 if max_degree == 3) at each sample and at q = 1.
PbwReport pbw_probe(const RMatrixData& rm, const RelationSet& s, int max_degree, const std::vector<Rational>& q_samples);

}  // namespace bicov
