#pragma once

// First order in hbar (q = 1 + hbar) of the R-matrix data, and extraction of
// the bracket {Omega_1, Omega_2} from a quadratic relation set through
// Omega Omega' + Omega' Omega = hbar {Omega, Omega'}.

#include <optional>

#include "bicov/bracket.hpp"
#include "bicov/relations.hpp"

namespace bicov {

struct SemiclassicalData {
  GroupData group;
  SpaceTensor<Rational> p;        // flip
  SpaceTensor<Rational> k0, k1;   // K at q = 1 and dK/dq at q = 1
  SpaceTensor<Rational> r_tilde;  // Rhat = P + hbar P r_tilde
  SpaceTensor<Rational> r;        // r_tilde - (P - eps K0)
};

SemiclassicalData semiclassical_expand(const RMatrixData& rm);

/// r_tilde through q = exp(hbar) truncated at first order; must equal sd.r_tilde.
SpaceTensor<Rational> r_tilde_exponential(const RMatrixData& rm);

struct QeReport {
  bool holds = false;
  std::optional<Rational> computed;  // c with lhs - (K0 r_tilde term) = c K0, if proportional
  Rational quoted;                   // -eps (1 - eps N)
};
/// index 0: K1 - eps K1 P = K0 r~ + c K0;  index 1: K1 - eps P K1 = r~_21 K0 + c K0.
std::array<QeReport, 2> qe_identities(const SemiclassicalData& sd);

/// Order-zero limits, CYBE for r_tilde, (qe), skew r with ad-invariant mYBE defect,
/// and parameterization independence.
std::vector<NamedCheck> semiclassical_checks(const RMatrixData& rm, const SemiclassicalData& sd);

/// G_12 = -[W1,[W2,r]]_+ + P(W1^2 + W2^2) - eps(K W1 W2 + W1 W2 K + W1 K W2 + W2 K W1).
FormTensor<Rational> g_tensor(const SemiclassicalData& sd);

/// [W1,[W2,r]]_+ - P(W1^2 + W2^2) + eps (W1 K W2 + W2 K W1).
GeneratorBracket<Rational> fgf_bracket(const SemiclassicalData& sd);

/// Components of K W1 W2 + W1 W2 K (degree-2 generators of the constraint ideal).
std::vector<GrassPoly<Rational>> gru_generators(const SemiclassicalData& sd);

struct Extraction {
  std::size_t relations = 0;
  std::size_t pairs = 0;       // unordered generator pairs (unknown brackets)
  std::size_t monomials = 0;   // degree-2 monomials per unknown
  std::size_t rank = 0;        // rank of the order-0 coefficient matrix
  std::size_t nullity = 0;     // (pairs - rank) * (monomials - order0_constraints)
  std::size_t order0_constraints = 0;  // rank of antisymmetric parts at q = 1 (classical relations)
  bool consistent = false;     // modulo the classical relations
  GeneratorBracket<Rational> particular;  // free unknowns set to 0, values in normal form
  std::vector<std::vector<std::pair<std::size_t, Rational>>> coefficient_rows;  // over pair indices
  std::vector<GrassPoly<Rational>> rhs;          // order-1 part, one per coefficient row
  std::vector<GrassPoly<Rational>> constraints;  // independent classical relations
  bool unique() const { return consistent && nullity == 0; }
};

/// Linear system for the generator brackets at first order in hbar. Order-0
/// antisymmetric parts are classical quadratic relations; the first-order
/// equations are solved modulo their span.
Extraction extract_order_h_bracket(const RelationSet& s, const SemiclassicalData& sd);

/// b satisfies every first-order equation modulo the classical relations.
bool solves(const Extraction& e, const GeneratorBracket<Rational>& b);

struct GenwComparison {
  bool same_coefficient_span = false;
  bool particular_satisfies = false;
  bool reproduces() const { return same_coefficient_span && particular_satisfies; }
};
/// Compares the extracted system with (I - P0)(B + G) - (B + G) P0 = 0, P0 = eps K0 / N.
GenwComparison compare_with_genw(const Extraction& e, const SemiclassicalData& sd);

/// Pair index of (x, y) with x <= y among v generators.
std::size_t pair_index(int x, int y, int v);

}  // namespace bicov
