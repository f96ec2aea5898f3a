#pragma once

// Seeded random specialization of parameter polynomials (Schwartz-Zippel).

#include <array>
#include <cstdint>
#include <random>

#include "bicov/modp.hpp"
#include "bicov/mpoly.hpp"

namespace bicov {

using Rng = std::mt19937_64;

/// Nonzero rational p/q with |p| <= 97, 1 <= q <= 13.
Rational random_rational(Rng& rng);

/// Independent random values for every variable of the alphabet.
std::array<Rational, kNumVars> random_point(std::uint64_t seed);

Rational random_specialize(const MPoly& p, std::uint64_t seed);

template <std::uint64_t P>
Fp<P> random_specialize_mod(const MPoly& p, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, P - 1);
  std::array<Fp<P>, kNumVars> values;
  for (auto& v : values) v = Fp<P>::raw(dist(rng));
  Fp<P> acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Fp<P> t = from_rational<Fp<P>>(c);
    for (int k = 0; k < kNumVars; ++k) t = t * values[k].pow(e[k]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace bicov
