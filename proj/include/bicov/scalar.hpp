#pragma once

// Exact rational scalars and the small set of free functions every
// coefficient ring in the engine provides (is_zero, from_rational, to_string).

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bicov {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-3/4" or "0". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Integer power of a rational, negative exponents allowed for x != 0.
Rational pow(const Rational& x, int e);

/// Every coefficient ring used by the tensor and Grassmann layers.
template <class S>
concept Ring = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Conversion of an exact rational into a coefficient ring. Each ring
/// provides an overload of `convert_rational(const Rational&, S*)`.
inline Rational convert_rational(const Rational& x, const Rational*) { return x; }

template <class S>
S from_rational(const Rational& x) {
  return convert_rational(x, static_cast<const S*>(nullptr));
}

template <class S>
S from_int(long v) {
  return from_rational<S>(Rational(v));
}

}  // namespace bicov
