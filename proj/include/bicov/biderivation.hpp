#pragma once

// Generator-level graded brackets and their extension to the whole exterior
// algebra as graded biderivations:
//   {r, s}      = (-1)^{|r||s|+1} {s, r}
//   {r1, r2 r3} = {r1, r2} r3 + (-1)^{|r1||r2|} r2 {r1, r3}
//   {r1 r2, r3} = r1 {r2, r3} + (-1)^{|r2||r3|} {r1, r3} r2

#include <bit>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bicov/grassmann.hpp"
#include "bicov/linalg.hpp"

namespace bicov {

template <class S>
class GeneratorBracket {
 public:
  GeneratorBracket() = default;
  explicit GeneratorBracket(int n) : n_(n), table_(static_cast<std::size_t>(n * n * n * n)) {}

  /// Reads {Omega^i_j, Omega^k_l} from a two-space tensor on {1, 2}.
  static GeneratorBracket from_tensor(const FormTensor<S>& t) {
    if (t.spaces() != std::vector<int>{1, 2}) throw std::invalid_argument("bracket tensor must live on spaces {1,2}");
    GeneratorBracket b(t.dim());
    const int n = t.dim();
    for (const auto& [k, v] : t.entries()) {
      int a = generator_index(n, key::row(k, 0), key::col(k, 0));
      int c = generator_index(n, key::row(k, 1), key::col(k, 1));
      b.table_[b.slot(a, c)] = v;
    }
    return b;
  }

  /// Inverse of from_tensor.
  FormTensor<S> to_tensor() const {
    FormTensor<S> t(n_, {1, 2});
    const int v = generators();
    for (int a = 0; a < v; ++a)
      for (int c = 0; c < v; ++c) {
        const auto& p = table_[slot(a, c)];
        if (!p.zero()) t.add({{a / n_, a % n_}, {c / n_, c % n_}}, p);
      }
    return t;
  }

  int dim() const { return n_; }
  int generators() const { return n_ * n_; }
  const GrassPoly<S>& operator()(int a, int b) const { return table_[slot(a, b)]; }
  void set(int a, int b, GrassPoly<S> p) { table_[slot(a, b)] = std::move(p); }

  /// Graded symmetry on generators: {a, b} == {b, a}.
  bool graded_symmetric() const {
    const int v = generators();
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        if (!(table_[slot(a, b)] == table_[slot(b, a)])) return false;
    return true;
  }

  bool zero() const {
    for (const auto& p : table_)
      if (!p.zero()) return false;
    return true;
  }

  friend GeneratorBracket operator+(const GeneratorBracket& x, const GeneratorBracket& y) {
    GeneratorBracket r(x.n_);
    for (std::size_t i = 0; i < x.table_.size(); ++i) r.table_[i] = x.table_[i] + y.table_[i];
    return r;
  }
  friend GeneratorBracket operator-(const GeneratorBracket& x, const GeneratorBracket& y) {
    GeneratorBracket r(x.n_);
    for (std::size_t i = 0; i < x.table_.size(); ++i) r.table_[i] = x.table_[i] - y.table_[i];
    return r;
  }
  friend bool operator==(const GeneratorBracket& x, const GeneratorBracket& y) {
    return x.n_ == y.n_ && x.table_ == y.table_;
  }
  GeneratorBracket scaled(const S& c) const {
    GeneratorBracket r(n_);
    for (std::size_t i = 0; i < table_.size(); ++i) r.table_[i] = table_[i].scaled(c);
    return r;
  }
  template <class F>
  auto map_coefficients(F&& f) const -> GeneratorBracket<decltype(f(std::declval<const S&>()))> {
    GeneratorBracket<decltype(f(std::declval<const S&>()))> r(n_);
    for (int a = 0; a < generators(); ++a)
      for (int b = 0; b < generators(); ++b) r.set(a, b, (*this)(a, b).map_coefficients(f));
    return r;
  }

  /// {x, y1...yl} for a generator x and a monomial.
  GrassPoly<S> generator_with_monomial(int x, Mask mono) const {
    GrassPoly<S> acc;
    Mask prefix = 0;
    Mask rest = mono;
    int j = 0;
    while (rest) {
      int y = std::countr_zero(rest);
      rest &= rest - 1;
      const auto& b = (*this)(x, y);
      if (!b.zero()) {
        GrassPoly<S> term = GrassPoly<S>::monomial(prefix) * b * GrassPoly<S>::monomial(rest);
        acc += (j % 2 == 0) ? term : -term;
      }
      prefix |= Mask{1} << y;
      ++j;
    }
    return acc;
  }

  /// {x1...xk, n} for monomials, by left expansion of the first argument.
  GrassPoly<S> monomial_bracket(Mask m, Mask n) const {
    GrassPoly<S> acc;
    const int k = degree_of(m);
    const int dn = degree_of(n);
    Mask prefix = 0;
    Mask rest = m;
    int i = 0;
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      ++i;
      GrassPoly<S> inner = generator_with_monomial(x, n);
      if (!inner.zero()) {
        GrassPoly<S> term = GrassPoly<S>::monomial(prefix) * inner * GrassPoly<S>::monomial(rest);
        bool neg = ((dn * (k - i)) & 1) != 0;
        acc += neg ? -term : term;
      }
      prefix |= Mask{1} << x;
    }
    return acc;
  }

  /// Extension of the generator bracket to arbitrary elements.
  GrassPoly<S> operator()(const GrassPoly<S>& u, const GrassPoly<S>& v) const {
    GrassPoly<S> acc;
    for (const auto& [mu, cu] : u.terms()) {
      if (mu == 0) continue;
      for (const auto& [mv, cv] : v.terms()) {
        if (mv == 0) continue;
        auto b = monomial_bracket(mu, mv);
        if (!b.zero()) acc += b.scaled(cu * cv);
      }
    }
    return acc;
  }

  /// Same value computed through the symmetry rule, expanding v first.
  GrassPoly<S> via_symmetry(const GrassPoly<S>& u, const GrassPoly<S>& v) const {
    GrassPoly<S> acc;
    for (const auto& [mu, cu] : u.terms()) {
      if (mu == 0) continue;
      for (const auto& [mv, cv] : v.terms()) {
        if (mv == 0) continue;
        auto b = monomial_bracket(mv, mu);
        bool neg = ((degree_of(mu) * degree_of(mv) + 1) & 1) != 0;
        if (!b.zero()) acc += neg ? -b.scaled(cu * cv) : b.scaled(cu * cv);
      }
    }
    return acc;
  }

  /// Entrywise bracket of a form tensor with a Grassmann element: {M, u}.
  FormTensor<S> bracket_right(const FormTensor<S>& m, const GrassPoly<S>& u) const {
    return m.map([&](const GrassPoly<S>& e) { return (*this)(e, u); });
  }
  /// {u, M}.
  FormTensor<S> bracket_left(const GrassPoly<S>& u, const FormTensor<S>& m) const {
    return m.map([&](const GrassPoly<S>& e) { return (*this)(u, e); });
  }

  /// Cyclic Jacobiator {{a,b},c} + {{c,a},b} + {{b,c},a} on generators.
  GrassPoly<S> jacobiator(int a, int b, int c) const {
    return monomial_jacobi_term(a, b, c) + monomial_jacobi_term(c, a, b) + monomial_jacobi_term(b, c, a);
  }

  /// Graded Jacobiator of three homogeneous elements.
  GrassPoly<S> jacobiator(const GrassPoly<S>& x, int dx, const GrassPoly<S>& y, int dy, const GrassPoly<S>& z,
                          int dz) const {
    auto sign = [](int e) { return (e & 1) ? -1 : 1; };
    GrassPoly<S> t1 = (*this)((*this)(x, y), z);
    GrassPoly<S> t2 = (*this)((*this)(z, x), y);
    GrassPoly<S> t3 = (*this)((*this)(y, z), x);
    GrassPoly<S> acc = sign(dx * dz) > 0 ? t1 : -t1;
    acc += sign(dz * dy) > 0 ? t2 : -t2;
    acc += sign(dy * dx) > 0 ? t3 : -t3;
    return acc;
  }

 private:
  GrassPoly<S> monomial_jacobi_term(int a, int b, int c) const {
    const auto& ab = (*this)(a, b);
    GrassPoly<S> acc;
    for (const auto& [m, coef] : ab.terms()) {
      auto t = monomial_bracket(m, Mask{1} << c);
      if (!t.zero()) acc += t.scaled(coef);
    }
    return acc;
  }

  std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a * n_ * n_ + b); }

  int n_ = 0;
  std::vector<GrassPoly<S>> table_;
};

/// Extension of a generator bracket to arbitrary u, v.
template <class S>
GrassPoly<S> extend_biderivation(const GeneratorBracket<S>& b, const GrassPoly<S>& u, const GrassPoly<S>& v) {
  return b(u, v);
}

/// Coordinates of a Grassmann polynomial as a sparse vector keyed by monomial.
template <class F>
SparseVec<F, Mask> coordinates(const GrassPoly<F>& p) {
  SparseVec<F, Mask> v(p.terms().begin(), p.terms().end());
  return v;
}

/// Is u in the subalgebra generated by the given degree-1 elements?
/// Decided degree by degree: the degree-k part must lie in the span of all
/// k-fold products of the generators.
template <class F>
bool subalgebra_membership(const GrassPoly<F>& u, const std::vector<GrassPoly<F>>& gens) {
  for (const auto& g : gens)
    if (!g.homogeneous(1)) throw std::invalid_argument("subalgebra generators must have degree 1");
  const int top = u.max_degree();
  std::vector<GrassPoly<F>> layer{GrassPoly<F>(from_int<F>(1))};
  std::vector<std::vector<int>> last_index{{-1}};
  for (int d = 0; d <= top; ++d) {
    if (d > 0) {
      std::vector<GrassPoly<F>> next;
      std::vector<std::vector<int>> next_index;
      for (std::size_t p = 0; p < layer.size(); ++p) {
        int start = last_index[p].back() + 1;
        for (int g = start; g < static_cast<int>(gens.size()); ++g) {
          next.push_back(layer[p] * gens[g]);
          auto idx = last_index[p];
          if (idx.size() == 1 && idx[0] == -1) idx.clear();
          idx.push_back(g);
          next_index.push_back(std::move(idx));
        }
      }
      layer = std::move(next);
      last_index = std::move(next_index);
    }
    GrassPoly<F> part = u.component(d);
    if (part.zero()) continue;
    Echelon<F, Mask> span;
    for (const auto& p : layer) span.insert(coordinates(p));
    if (!span.contains(coordinates(part))) return false;
  }
  return true;
}

/// Degree-3 part of the ideal generated by degree-2 elements: span{g * theta}.
template <class F>
Echelon<F, Mask> ideal_degree3(const std::vector<GrassPoly<F>>& gens, int num_generators) {
  Echelon<F, Mask> span;
  for (const auto& g : gens) {
    if (!g.homogeneous(2)) throw std::invalid_argument("ideal generators must be homogeneous of degree 2");
    if (g.zero()) continue;
    for (int t = 0; t < num_generators; ++t) span.insert(coordinates(g * GrassPoly<F>::generator(t)));
  }
  return span;
}

template <class F>
bool ideal_membership(const GrassPoly<F>& u, const std::vector<GrassPoly<F>>& gens, int num_generators) {
  if (!u.homogeneous(3)) throw std::invalid_argument("ideal membership expects a homogeneous degree-3 element");
  if (u.zero()) return true;
  return ideal_degree3(gens, num_generators).contains(coordinates(u));
}

}  // namespace bicov
