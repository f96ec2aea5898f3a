#pragma once

// Laurent polynomials in the deformation parameter q. Odd orthogonal groups
// need half-integer powers of q, so a polynomial can also live in s = q^{1/2};
// mixing the two bases promotes to s.

#include <map>
#include <string>

#include "bicov/scalar.hpp"

namespace bicov {

enum class LaurentBase { q, s };

class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);             // NOLINT(google-explicit-constructor)
  LaurentQ(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * base^exponent
  static LaurentQ monomial(LaurentBase base, int exponent, const Rational& c = 1);
  static LaurentQ q_power(int e) { return monomial(LaurentBase::q, e); }
  /// q^{e/2}: expressed in base s.
  static LaurentQ half_q_power(int twice_e);

  LaurentBase base() const { return base_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  /// Re-express in base s (q^k -> s^{2k}).
  LaurentQ in_s() const;
  /// Back to base q when every exponent is even; otherwise unchanged.
  LaurentQ simplified() const;

  friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o) { return *this = *this + o; }
  LaurentQ& operator-=(const LaurentQ& o) { return *this = *this - o; }
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b);

  /// Value at base = x (x is q for base q, s for base s). Throws on x == 0.
  Rational evaluate_base(const Rational& x) const;
  /// Value at q = q0. For base s this needs q0 to be a rational square.
  Rational evaluate_q(const Rational& q0) const;
  /// Value of d/dq at q = 1 (accounts for s = q^{1/2}).
  Rational derivative_at_one() const;

  template <class F>
  F evaluate_base_in(const F& x) const {
    F acc = from_int<F>(0);
    F inv = from_int<F>(1) / x;
    for (const auto& [e, c] : terms_) {
      F term = from_rational<F>(c);
      F b = e >= 0 ? x : inv;
      for (int k = 0; k < (e >= 0 ? e : -e); ++k) term = term * b;
      acc = acc + term;
    }
    return acc;
  }

  std::string str() const;

 private:
  LaurentBase base_ = LaurentBase::q;
  std::map<int, Rational> terms_;
};

inline bool is_zero(const LaurentQ& p) { return p.zero(); }
inline std::string to_string(const LaurentQ& p) { return p.str(); }
inline LaurentQ convert_rational(const Rational& x, const LaurentQ*) { return LaurentQ(x); }

/// Symmetric q-number [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
LaurentQ q_number(int n);
/// lambda = q - q^{-1}.
LaurentQ q_lambda();

/// Exact evaluation at q0 (the operation exposed to callers). Rejects q0 == 0.
Rational laurent_eval(const LaurentQ& p, const Rational& q0);

}  // namespace bicov
