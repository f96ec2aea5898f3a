#pragma once

// First-order jets a + b*hbar, truncated at O(hbar^2).

#include <stdexcept>
#include <string>

#include "bicov/laurent.hpp"
#include "bicov/scalar.hpp"

namespace bicov {

template <class S = Rational>
struct HJet {
  S order0 = from_int<S>(0);
  S order1 = from_int<S>(0);

  HJet() = default;
  HJet(S a, S b) : order0(std::move(a)), order1(std::move(b)) {}
  HJet(long c) : order0(from_int<S>(c)), order1(from_int<S>(0)) {}  // NOLINT(google-explicit-constructor)

  static HJet hbar() { return {from_int<S>(0), from_int<S>(1)}; }

  friend HJet operator+(const HJet& a, const HJet& b) { return {a.order0 + b.order0, a.order1 + b.order1}; }
  friend HJet operator-(const HJet& a, const HJet& b) { return {a.order0 - b.order0, a.order1 - b.order1}; }
  friend HJet operator*(const HJet& a, const HJet& b) {
    return {a.order0 * b.order0, a.order0 * b.order1 + a.order1 * b.order0};
  }
  friend HJet operator/(const HJet& a, const HJet& b) {
    if (is_zero(b.order0)) throw std::domain_error("division by a jet with zero constant term");
    return {a.order0 / b.order0, (a.order1 * b.order0 - a.order0 * b.order1) / (b.order0 * b.order0)};
  }
  HJet operator-() const { return {-order0, -order1}; }
  HJet& operator+=(const HJet& o) { return *this = *this + o; }
  HJet& operator*=(const HJet& o) { return *this = *this * o; }
  friend bool operator==(const HJet& a, const HJet& b) { return a.order0 == b.order0 && a.order1 == b.order1; }
};

template <class S>
bool is_zero(const HJet<S>& x) {
  return is_zero(x.order0) && is_zero(x.order1);
}

template <class S>
std::string to_string(const HJet<S>& x) {
  return "(" + to_string(x.order0) + ", " + to_string(x.order1) + ")";
}

template <class S>
HJet<S> convert_rational(const Rational& x, const HJet<S>*) {
  return {from_rational<S>(x), from_int<S>(0)};
}

/// Substitutes q = 1 + hbar and keeps (p(1), p'(1)).
inline HJet<Rational> hjet_of_laurent(const LaurentQ& p) {
  return {p.evaluate_base(1), p.derivative_at_one()};
}

}  // namespace bicov
