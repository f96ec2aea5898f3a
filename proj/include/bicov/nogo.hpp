#pragma once

// The bracket obtained from the reduced three-term relation, tested against
// the differential and Poisson conditions, and the bracket -G restricted to
// the surface K W1 W2 + W1 W2 K = 0.

#include <optional>

#include "bicov/semiclassical.hpp"

namespace bicov {

struct OmegaMinusTraceReport {
  FormTensor<Rational> trace_defect;   // {W-, tr W} + 2 (W-)^2, single space
  FormTensor<Rational> leibniz;        // Leibniz combination on W-_1, W-_2
  bool trace_identity() const { return trace_defect.zero(); }
  bool leibniz_vanishes() const { return leibniz.zero(); }
};

OmegaMinusTraceReport omega_minus_trace_bracket(const GroupData& g, const GeneratorBracket<Rational>& b);

/// Jacobiator on all generator triples, each reduced modulo the degree-3 part
/// of the ideal spanned by gens.
ResidualReport jacobi_modulo_ideal(const GeneratorBracket<Rational>& b, const std::vector<GrassPoly<Rational>>& gens);

/// Parameter values (slots of the general family) reproducing b - r-term(r), if any.
std::optional<BracketParams<Rational>> family_parameters(const BracketBasis& basis, const GeneratorBracket<Rational>& b,
                                                        const SpaceTensor<Rational>& r);

struct FgfReport {
  GroupData group;
  ResidualReport nilpotency, jacobi, jacobi_mod_gru;
  OmegaMinusTraceReport omega_minus;
  std::optional<BracketParams<Rational>> params;
};

FgfReport fgf_no_go(const SemiclassicalData& sd);

struct ConstrainedPoissonReport {
  bool symmetric_modulo_gru = false;  // {a,b} - {b,a} of -G in span of the constraint components
  bool symmetric = false;             // without the constraint
  ResidualReport jacobi_mod_gru;      // symmetrized -G
  ResidualReport jacobi;              // symmetrized -G, no reduction
};

ConstrainedPoissonReport constrained_poisson_check(const SemiclassicalData& sd);

}  // namespace bicov
