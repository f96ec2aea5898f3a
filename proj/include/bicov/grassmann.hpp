#pragma once

// Exterior algebra on the N^2 one-form generators Omega^i_j.
//
// Generator (i, j) has index i*N + j (0-based); a monomial is the bitmask of
// its generators, read as the strictly increasing product. All signs derive
// from this single order.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicov/scalar.hpp"
#include "bicov/tensor.hpp"

namespace bicov {

using Mask = std::uint64_t;

inline constexpr int kDefaultDegreeCap = 4;

class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int degree_of(Mask m) { return std::popcount(m); }

/// Sign of the product of monomials x*y rewritten in increasing order
/// (0 if they share a generator).
inline int wedge_sign(Mask x, Mask y) {
  if (x & y) return 0;
  int parity = 0;
  Mask rest = y;
  while (rest) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    parity += std::popcount(b == 63 ? Mask{0} : (x >> (b + 1)));
  }
  return (parity & 1) ? -1 : 1;
}

template <class S>
class GrassPoly {
 public:
  using Term = std::pair<Mask, S>;

  GrassPoly() = default;
  GrassPoly(const S& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) terms_.emplace_back(Mask{0}, c);
  }

  static GrassPoly generator(int index, const S& c = from_int<S>(1)) {
    GrassPoly p;
    if (!is_zero(c)) p.terms_.emplace_back(Mask{1} << index, c);
    return p;
  }
  static GrassPoly monomial(Mask m, const S& c = from_int<S>(1)) {
    GrassPoly p;
    if (!is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Takes ownership of unsorted terms and canonicalizes them.
  static GrassPoly from_terms(std::vector<Term> terms) {
    GrassPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int max_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, degree_of(t.first));
    return d;
  }
  bool homogeneous(int degree) const {
    for (const auto& t : terms_)
      if (degree_of(t.first) != degree) return false;
    return true;
  }
  S coefficient(Mask m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Mask k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : from_int<S>(0);
  }
  /// Degree-d component.
  GrassPoly component(int degree) const {
    GrassPoly p;
    for (const auto& t : terms_)
      if (degree_of(t.first) == degree) p.terms_.push_back(t);
    return p;
  }

  friend GrassPoly operator+(const GrassPoly& a, const GrassPoly& b) {
    GrassPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.push_back(*j++);
      } else {
        S s = i->second + j->second;
        if (!is_zero(s)) r.terms_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }
  GrassPoly operator-() const {
    GrassPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend GrassPoly operator-(const GrassPoly& a, const GrassPoly& b) { return a + (-b); }
  GrassPoly& operator+=(const GrassPoly& o) { return *this = *this + o; }
  GrassPoly& operator-=(const GrassPoly& o) { return *this = *this - o; }

  friend GrassPoly operator*(const GrassPoly& a, const GrassPoly& b) { return wedge(a, b, kDefaultDegreeCap); }
  GrassPoly& operator*=(const GrassPoly& o) { return *this = *this * o; }

  /// Scalar multiple.
  GrassPoly scaled(const S& c) const {
    GrassPoly r;
    if (is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) {
      S x = v * c;
      if (!is_zero(x)) r.terms_.emplace_back(m, std::move(x));
    }
    return r;
  }

  friend GrassPoly wedge(const GrassPoly& a, const GrassPoly& b, int cap) {
    GrassPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        Mask m = ma | mb;
        if (degree_of(m) > cap) throw DegreeOverflow("Grassmann degree cap exceeded");
        S c = ca * cb;
        r.terms_.emplace_back(m, s > 0 ? std::move(c) : S(-c));
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const GrassPoly& a, const GrassPoly& b) { return a.terms_ == b.terms_; }

  template <class F>
  auto map_coefficients(F&& f) const -> GrassPoly<decltype(f(std::declval<const S&>()))> {
    using U = decltype(f(std::declval<const S&>()));
    std::vector<typename GrassPoly<U>::Term> t;
    for (const auto& [m, c] : terms_) t.emplace_back(m, f(c));
    return GrassPoly<U>::from_terms(std::move(t));
  }

  std::string str(int n = 0) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      Mask rest = m;
      while (rest) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        if (n > 0)
          os << "*w" << g / n + 1 << g % n + 1;
        else
          os << "*t" << g;
      }
    }
    return os.str();
  }

 private:
  template <class U>
  friend class GrassPoly;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = out.back().second + t.second;
      } else {
        if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

template <class S>
bool is_zero(const GrassPoly<S>& p) {
  return p.zero();
}
template <class S>
std::string to_string(const GrassPoly<S>& p) {
  return p.str();
}
template <class S>
GrassPoly<S> convert_rational(const Rational& x, const GrassPoly<S>*) {
  return GrassPoly<S>(from_rational<S>(x));
}

/// Explicit wedge product with a degree cap (DegreeOverflow when exceeded).
template <class S>
GrassPoly<S> wedge_mul(const GrassPoly<S>& u, const GrassPoly<S>& v, int cap = kDefaultDegreeCap) {
  return wedge(u, v, cap);
}

/// Matrix whose entries are Grassmann polynomials, on one or more spaces.
template <class S>
using FormTensor = SpaceTensor<GrassPoly<S>>;

inline int generator_index(int n, int i, int j) { return i * n + j; }

/// Omega placed in space `label`: entry (i, j) is the generator Omega^i_j.
template <class S>
FormTensor<S> omega(int n, int label = 1) {
  FormTensor<S> t(n, {label});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.add({{i, j}}, GrassPoly<S>::generator(generator_index(n, i, j)));
  return t;
}

/// tr Omega = sum_i Omega^i_i.
template <class S>
GrassPoly<S> trace_omega(int n) {
  GrassPoly<S> t;
  for (int i = 0; i < n; ++i) t += GrassPoly<S>::generator(generator_index(n, i, i));
  return t;
}

/// Scalar tensor lifted to constant Grassmann entries.
template <class S>
FormTensor<S> lift(const SpaceTensor<S>& t) {
  return t.map([](const S& c) { return GrassPoly<S>(c); });
}

/// tilde in one space: C M^t C^{-1}, with C and C^{-1} single-space metrics.
template <class S>
FormTensor<S> tilde_in(const FormTensor<S>& m, int label, const SpaceTensor<S>& metric,
                       const SpaceTensor<S>& metric_inv) {
  auto c = lift(relabel(metric, {{metric.spaces().front(), label}}));
  auto ci = lift(relabel(metric_inv, {{metric_inv.spaces().front(), label}}));
  return c * transpose_in(m, label) * ci;
}

}  // namespace bicov
