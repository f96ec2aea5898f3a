#pragma once

// Braid-form R-matrix of SO_q(N) / Sp_q(N) in the vector representation,
// the rank-one matrix K and the projector decomposition. Projectors carry
// denominators, so they are stored as numerators over one common Laurent
// denominator (q + 1/q) mu.

#include <string>
#include <vector>

#include "bicov/group.hpp"
#include "bicov/laurent.hpp"
#include "bicov/tensor.hpp"

namespace bicov {

using QTensor = SpaceTensor<LaurentQ>;

struct RMatrixData {
  GroupData group;
  QTensor rhat;    // spaces {1,2}
  QTensor k;       // spaces {1,2}
  QTensor cq;      // quantum metric C^{ij}, space {1}
  QTensor cq_inv;  // C_{ij}
  LaurentQ lambda, nu, mu;
  LaurentQ mu_plus_num, mu_minus_num;  // mu * mu_(+/-)
  LaurentQ proj_den;                   // (q + 1/q) mu
  QTensor p_plus_num, p_minus_num, p_zero_num;
  std::vector<NamedCheck> validation;
};

/// Twice the Weyl vector components used by the assembly (integers).
std::vector<int> twice_rho(const GroupData& g);

/// Assembles R, K, C_q and the projector numerators without validating.
RMatrixData assemble_rmatrix(const GroupData& g);

/// braid, cubic, KR/RK, K^2, projector algebra and the (ww) identities.
std::vector<NamedCheck> validate_rmatrix(const RMatrixData& rm);

/// assemble + validate; throws std::runtime_error naming the first failed check.
RMatrixData build_rmatrix(const GroupData& g);

struct ProjectorRanks {
  int plus = 0, minus = 0, zero = 0;
};
/// Exact ranks as traces; also confirms tr(numerator) = rank * denominator symbolically.
ProjectorRanks projector_ranks(const RMatrixData& rm);

/// Classical-group oracle for the ranks.
ProjectorRanks expected_ranks(const GroupData& g);

/// Coefficientwise evaluation at q = q0 (needs a rational square root for odd SO).
SpaceTensor<Rational> evaluate_at(const QTensor& t, const Rational& q0);

}  // namespace bicov
