#pragma once

// Prime-field arithmetic for randomized identity testing and modular rank.

#include <cstdint>
#include <string>

#include "bicov/scalar.hpp"

namespace bicov {

/// Two 62-bit primes used for modular rank consensus.
inline constexpr std::uint64_t kPrimeA = 4611686018427387847ULL;  // 2^62 - 57
inline constexpr std::uint64_t kPrimeB = 4611686018427387817ULL;  // 2^62 - 87

template <std::uint64_t P>
class Fp {
 public:
  static constexpr std::uint64_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long v)  // NOLINT(google-explicit-constructor)
      : v_(v >= 0 ? static_cast<std::uint64_t>(v) % P
                  : (P - (static_cast<std::uint64_t>(-(v + 1)) % P) - 1) % P) {}

  static constexpr Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v % P;
    return f;
  }

  constexpr std::uint64_t value() const { return v_; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= P) s -= P;
    return raw(s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
  constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % P));
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = raw(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  /// Fermat inverse; the caller guarantees a nonzero argument.
  constexpr Fp inverse() const { return pow(P - 2); }
  friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

 private:
  std::uint64_t v_ = 0;
};

template <std::uint64_t P>
bool is_zero(const Fp<P>& x) {
  return x.value() == 0;
}

template <std::uint64_t P>
std::string to_string(const Fp<P>& x) {
  return std::to_string(x.value());
}

template <std::uint64_t P>
Fp<P> reduce_integer(const Integer& z) {
  Integer m = z % Integer(std::to_string(P));
  if (m < 0) m += Integer(std::to_string(P));
  return Fp<P>::raw(std::stoull(m.get_str()));
}

/// Rational -> F_p. Throws std::domain_error when p divides the denominator.
template <std::uint64_t P>
Fp<P> convert_rational(const Rational& x, const Fp<P>*) {
  Fp<P> den = reduce_integer<P>(x.get_den());
  if (is_zero(den)) throw std::domain_error("denominator vanishes modulo p");
  return reduce_integer<P>(x.get_num()) / den;
}

using FpA = Fp<kPrimeA>;
using FpB = Fp<kPrimeB>;

}  // namespace bicov
