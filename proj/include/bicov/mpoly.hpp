#pragma once

// Sparse multivariate polynomials with rational coefficients over the fixed
// bracket-parameter alphabet a1..a7, b1..b7, c1..c7, mu, nu, kappa.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicov/scalar.hpp"

namespace bicov {

inline constexpr int kNumVars = 24;

/// Index of a named variable; nullopt for names outside the alphabet.
std::optional<int> var_index(std::string_view name);
std::string_view var_name(int index);

/// Named variable helpers: a(3) is a3, etc.
int var_a(int i);
int var_b(int i);
int var_c(int i);
inline constexpr int kVarMu = 21;
inline constexpr int kVarNu = 22;
inline constexpr int kVarKappa = 23;

using Exponents = std::array<std::uint8_t, kNumVars>;

class MPoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  MPoly() = default;
  MPoly(long c);             // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MPoly variable(int index);
  static MPoly variable(std::string_view name);

  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int total_degree() const;
  /// True if the polynomial is a constant (possibly zero).
  bool is_constant() const;
  Rational constant_term() const;
  /// Bitmask of variables that occur.
  std::uint32_t support() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Substitute rational values for every variable; missing values count as 0.
  Rational evaluate(const std::array<Rational, kNumVars>& values) const;
  /// Substitute the given variables by polynomials, leaving others untouched.
  MPoly substitute(const std::map<int, MPoly>& values) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by exponent vector, no zero coefficients
};

inline bool is_zero(const MPoly& p) { return p.zero(); }
inline std::string to_string(const MPoly& p) { return p.str(); }
inline MPoly convert_rational(const Rational& x, const MPoly*) { return MPoly(x); }

/// Parses sums of products like "2*b1 + 1/2*mu - c3^2". Throws std::invalid_argument.
MPoly parse_mpoly(std::string_view text);

}  // namespace bicov
