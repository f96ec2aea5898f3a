#include "bicov/random.hpp"

namespace bicov {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-97, 97);
  std::uniform_int_distribution<long> den(1, 13);
  long n = 0;
  while (n == 0) n = num(rng);
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

std::array<Rational, kNumVars> random_point(std::uint64_t seed) {
  Rng rng(seed);
  std::array<Rational, kNumVars> values;
  for (auto& v : values) v = random_rational(rng);
  return values;
}

Rational random_specialize(const MPoly& p, std::uint64_t seed) { return p.evaluate(random_point(seed)); }

}  // namespace bicov
