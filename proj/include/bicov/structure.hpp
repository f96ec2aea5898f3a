#pragma once

// Exact structural identities behind the bracket family: tilde involution and
// sign rule, K0 Omega_1 = K0 Omega~_2, vanishing of the c5 term, the tilde
// image of X(a,b,c), and (tr Omega)^2 = 0.

#include <vector>

#include "bicov/bracket.hpp"

namespace bicov {

std::vector<NamedCheck> structural_identities(const GroupData& g);

}  // namespace bicov
