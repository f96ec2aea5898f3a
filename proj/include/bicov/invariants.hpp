#pragma once

// Dimension of the G-invariant part of S^2 V (x) L^2 V, V = Mat(N) with the
// adjoint action: the number of independent invariant tensors W_1234 with
// W_1234 = W_2134 = -W_1243.

#include <cstddef>

#include "bicov/group.hpp"

namespace bicov {

struct InvariantCount {
  std::size_t weight_zero = 0;  // dimension of the zero-weight subspace
  std::size_t rank_a = 0, rank_b = 0;  // rank of the root-vector action mod each prime
  std::size_t count = 0;        // weight_zero - rank (primes agree)
  bool primes_agree = false;
};

/// Zero-weight tensors killed by every root vector; exact ranks modulo two primes.
InvariantCount invariant_count(const GroupData& g);

}  // namespace bicov
