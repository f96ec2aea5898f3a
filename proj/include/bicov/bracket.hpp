#pragma once

// The twenty-parameter family of bicovariant graded brackets on Mat(N)-valued
// one-forms and the identity suites run on it.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicov/biderivation.hpp"
#include "bicov/combination.hpp"
#include "bicov/grassmann.hpp"
#include "bicov/group.hpp"
#include "bicov/mpoly.hpp"

namespace bicov {

/// a[i], b[i], c[i] for i = 1..7 (index 0 unused). c[5] is kept at 0.
template <class S>
struct BracketParams {
  std::array<S, 8> a{}, b{}, c{};
  BracketParams() {
    for (int i = 0; i < 8; ++i) a[i] = b[i] = c[i] = from_int<S>(0);
  }
  /// Slot k in 0..20: a1..a7, b1..b7, c1..c7.
  S& slot(int k) { return k < 7 ? a[k + 1] : k < 14 ? b[k - 6] : c[k - 13]; }
  const S& slot(int k) const { return k < 7 ? a[k + 1] : k < 14 ? b[k - 6] : c[k - 13]; }
};

inline constexpr int kParamSlots = 21;
inline constexpr int kSlotC5 = 18;

/// Name of slot k ("a1".."c7").
std::string slot_name(int k);
/// Slot of a parameter name; nullopt if unknown.
std::optional<int> slot_of(std::string_view name);

/// All 20 free parameters as MPoly variables, c5 = 0.
BracketParams<MPoly> symbolic_params();
/// Evaluates MPoly parameters at a point.
BracketParams<Rational> evaluate_params(const BracketParams<MPoly>& p, const std::array<Rational, kNumVars>& at);
/// Throws std::invalid_argument if c5 != 0.
template <class S>
void require_c5_zero(const BracketParams<S>& p) {
  if (!is_zero(p.c[5])) throw std::invalid_argument("c5 must vanish");
}

template <class S>
SpaceTensor<S> convert_rational_tensor(const SpaceTensor<Rational>& t) {
  return t.map([](const Rational& x) { return from_rational<S>(x); });
}

/// Omega_label, Omega~_label.
template <class S>
FormTensor<S> omega_tilde(const GroupData& g, int label) {
  auto om = omega<S>(g.n, label);
  return tilde_in(om, label, convert_rational_tensor<S>(g.metric), convert_rational_tensor<S>(g.metric_inv));
}

/// Omega^+ and Omega^- in one space.
template <class S>
FormTensor<S> omega_plus(const GroupData& g, int label) {
  return omega<S>(g.n, label) + omega_tilde<S>(g, label);
}
template <class S>
FormTensor<S> omega_minus(const GroupData& g, int label) {
  return omega<S>(g.n, label) - omega_tilde<S>(g, label);
}

/// [Omega_1, [Omega_2, r_12]]_+
template <class S>
FormTensor<S> r_term(const GroupData& /*g*/, const SpaceTensor<Rational>& r, const FormTensor<S>& o1,
                     const FormTensor<S>& o2) {
  auto rr = lift(convert_rational_tensor<S>(r));
  auto m = o2 * rr - rr * o2;
  return o1 * m + m * o1;
}

/// Term i (1..7) of the bracket for a given X^{(i)} (on spaces {1,2}).
template <class S>
FormTensor<S> x_term(const GroupData& g, int i, const FormTensor<S>& x) {
  auto o1 = omega<S>(g.n, 1), o2 = omega<S>(g.n, 2);
  auto t1 = omega_tilde<S>(g, 1), t2 = omega_tilde<S>(g, 2);
  GrassPoly<S> tr = trace_omega<S>(g.n);
  switch (i) {
    case 1: return x * (o1 * o1 + o2 * o2);
    case 2: return (t1 * t1 + t2 * t2) * x;
    case 3: return t1 * x * o1 + t2 * x * o2;
    case 4: return t1 * x * o2 + t2 * x * o1;
    case 5: return x * (o1 * t1 + o2 * t2);
    case 6: return (x * (t1 + t2)) * tr;
    case 7: return ((o1 + o2) * x) * tr;
    default: throw std::invalid_argument("bracket term index must be 1..7");
  }
}

/// Generator brackets of each parameter slot with r = 0 (unit parameter).
struct BracketBasis {
  GroupData group;
  std::vector<GeneratorBracket<Rational>> slots;  // kParamSlots entries
};
BracketBasis make_bracket_basis(const GroupData& g);

/// Generator bracket of the r-term alone.
GeneratorBracket<Rational> r_bracket(const GroupData& g, const SpaceTensor<Rational>& r);

template <class S>
GeneratorBracket<S> combine(const BracketBasis& basis, const BracketParams<S>& p, const GeneratorBracket<Rational>& rpart) {
  require_c5_zero(p);
  const int v = basis.group.n * basis.group.n;
  GeneratorBracket<S> out(basis.group.n);
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      std::vector<typename GrassPoly<S>::Term> terms;
      for (const auto& [m, c] : rpart(x, y).terms()) terms.emplace_back(m, from_rational<S>(c));
      for (int k = 0; k < kParamSlots; ++k) {
        const S& coef = p.slot(k);
        if (is_zero(coef)) continue;
        for (const auto& [m, c] : basis.slots[k](x, y).terms()) terms.emplace_back(m, from_rational<S>(c) * coef);
      }
      out.set(x, y, GrassPoly<S>::from_terms(std::move(terms)));
    }
  return out;
}

/// Full bracket: r-term plus parameter terms. Verifies graded symmetry.
template <class S>
GeneratorBracket<S> build_bracket(const BracketBasis& basis, const BracketParams<S>& p,
                                  const SpaceTensor<Rational>& r) {
  auto b = combine(basis, p, r_bracket(basis.group, r));
  if (!b.graded_symmetric()) throw std::logic_error("bracket violates graded symmetry");
  return b;
}

/// Direct construction from the seven-term formula (slow path, used to
/// validate the basis decomposition).
template <class S>
GeneratorBracket<S> build_bracket_direct(const GroupData& g, const BracketParams<S>& p, const SpaceTensor<Rational>& r) {
  require_c5_zero(p);
  auto o1 = omega<S>(g.n, 1), o2 = omega<S>(g.n, 2);
  FormTensor<S> total = r_term(g, r, o1, o2);
  for (int i = 1; i <= 7; ++i) {
    auto x = lift(x_structure<S>(g, p.a[i], p.b[i], p.c[i]));
    total += x_term(g, i, x);
  }
  return GeneratorBracket<S>::from_tensor(total.extended({1, 2}));
}

// ---------------------------------------------------------------------------
// Residual reports

struct ResidualReport {
  std::size_t checked = 0;
  std::size_t nonzero = 0;
  std::string sample;  // first nonzero residual, rendered
  bool vanishes() const { return nonzero == 0; }
};

template <class S>
void record(ResidualReport& rep, const GrassPoly<S>& value, const std::string& where) {
  ++rep.checked;
  if (value.zero()) return;
  if (rep.nonzero++ == 0) rep.sample = where + ": " + value.str();
}

/// Images {Omega^a, tr Omega} of every generator.
template <class S>
std::vector<GrassPoly<S>> trace_images(const GeneratorBracket<S>& b) {
  const int n = b.dim();
  std::vector<GrassPoly<S>> out(n * n);
  for (int a = 0; a < n * n; ++a)
    for (int i = 0; i < n; ++i) out[a] += b(a, generator_index(n, i, i));
  return out;
}

/// Odd derivation of degree +1 (the map u -> {u, tr Omega}) extended from
/// generator images: d(x1...xk) = sum_i (-1)^{k-i} x1..d(xi)..xk.
template <class S>
GrassPoly<S> apply_trace_derivation(const std::vector<GrassPoly<S>>& images, const GrassPoly<S>& u) {
  GrassPoly<S> acc;
  for (const auto& [m, c] : u.terms()) {
    const int k = degree_of(m);
    Mask prefix = 0, rest = m;
    int i = 0;
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      ++i;
      const auto& img = images[x];
      if (!img.zero()) {
        auto term = GrassPoly<S>::monomial(prefix) * img * GrassPoly<S>::monomial(rest);
        term = term.scaled(c);
        acc += ((k - i) & 1) ? -term : term;
      }
      prefix |= Mask{1} << x;
    }
  }
  return acc;
}

/// {{Omega, tr Omega}, tr Omega} entrywise.
template <class S>
ResidualReport check_nilpotency(const GeneratorBracket<S>& b) {
  auto img = trace_images(b);
  ResidualReport rep;
  for (int a = 0; a < b.generators(); ++a) record(rep, apply_trace_derivation(img, img[a]), "gen " + std::to_string(a));
  return rep;
}

/// Nilpotency for a trace derivation given directly by generator images.
template <class S>
ResidualReport check_nilpotency_images(const std::vector<GrassPoly<S>>& img) {
  ResidualReport rep;
  for (std::size_t a = 0; a < img.size(); ++a)
    record(rep, apply_trace_derivation(img, img[a]), "gen " + std::to_string(a));
  return rep;
}

/// {{x,y},t} + {{x,t},y} - {x,{y,t}} for the given degree-1 elements.
template <class S>
GrassPoly<S> leibniz_residual(const GeneratorBracket<S>& b, const std::vector<GrassPoly<S>>& img,
                              const GrassPoly<S>& x, const GrassPoly<S>& y) {
  GrassPoly<S> xt = apply_trace_derivation(img, x);
  GrassPoly<S> yt = apply_trace_derivation(img, y);
  return apply_trace_derivation(img, b(x, y)) + b(xt, y) - b(x, yt);
}

/// Leibniz identity on every ordered generator pair.
template <class S>
ResidualReport check_leibniz(const GeneratorBracket<S>& b) {
  auto img = trace_images(b);
  ResidualReport rep;
  const int v = b.generators();
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      GrassPoly<S> val = apply_trace_derivation(img, b(x, y)) + b(img[x], GrassPoly<S>::generator(y)) -
                         b(GrassPoly<S>::generator(x), img[y]);
      record(rep, val, "pair " + std::to_string(x) + "," + std::to_string(y));
    }
  return rep;
}

/// Jacobiator on all generator triples a <= b <= c (it is totally symmetric
/// on odd generators, so the sorted triples are complete).
template <class S>
ResidualReport check_jacobi(const GeneratorBracket<S>& b, bool stop_at_first = false) {
  ResidualReport rep;
  const int v = b.generators();
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y)
      for (int z = y; z < v; ++z) {
        record(rep, b.jacobiator(x, y, z), "triple " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
        if (stop_at_first && rep.nonzero) return rep;
      }
  return rep;
}

/// d(u) = (1/kappa) {tr Omega, u}
template <class S>
GrassPoly<S> differential_d(const GeneratorBracket<S>& b, const GrassPoly<S>& u, const S& kappa_inverse) {
  return b(trace_omega<S>(b.dim()), u).scaled(kappa_inverse);
}

// ---------------------------------------------------------------------------
// {Omega, tr Omega} shape

/// The six structures Omega^2, Omega~^2, Omega~Omega, Omega Omega~, Omega~ trOmega, Omega trOmega.
std::array<FormTensor<Rational>, 6> trace_structures(const GroupData& g);

template <class S>
struct MuVector {
  std::array<S, 6> mu;
  bool shape_ok = true;  // zero residual
};

using FormKey = std::pair<int, Mask>;  // (generator, monomial)

template <class S>
std::map<FormKey, S> form_coordinates(const std::vector<GrassPoly<S>>& entries) {
  std::map<FormKey, S> out;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (const auto& [m, c] : entries[a].terms()) out.emplace(FormKey{static_cast<int>(a), m}, c);
  return out;
}

std::vector<GrassPoly<Rational>> entries_of(const FormTensor<Rational>& single_space);

template <class S>
MuVector<S> mu_extract(const GeneratorBracket<S>& b, const GroupData& g) {
  auto st = trace_structures(g);
  std::vector<RationalColumn<FormKey>> cols;
  for (const auto& s : st) {
    RationalColumn<FormKey> col;
    for (const auto& [k, c] : form_coordinates(entries_of(s))) col.emplace(k, c);
    cols.push_back(std::move(col));
  }
  auto res = solve_combination<S, FormKey>(cols, form_coordinates(trace_images(b)));
  if (!res.free_columns.empty()) throw std::logic_error("trace structures are linearly dependent");
  MuVector<S> out;
  for (int i = 0; i < 6; ++i) out.mu[i] = res.coefficients[i];
  out.shape_ok = res.exact();
  return out;
}

/// Generator images of the trace derivation for a given mu vector.
template <class S>
std::vector<GrassPoly<S>> images_from_mu(const GroupData& g, const std::array<S, 6>& mu) {
  auto st = trace_structures(g);
  std::vector<GrassPoly<S>> out(g.n * g.n);
  for (int k = 0; k < 6; ++k) {
    if (is_zero(mu[k])) continue;
    auto e = entries_of(st[k]);
    for (std::size_t a = 0; a < e.size(); ++a)
      out[a] += e[a].map_coefficients([&](const Rational& c) -> S { return from_rational<S>(c) * mu[k]; });
  }
  return out;
}

/// Expected values of mu_1..mu_6 as polynomials in the parameters.
std::array<MPoly, 6> k4_polynomials(const GroupData& g);

enum class TraceShape { family_i, family_ii, family_iii, family_iv, none };
std::string to_string(TraceShape s);
/// Classification of a mu vector into the four nilpotent families.
TraceShape classify_mu(const std::array<MPoly, 6>& mu);
TraceShape classify_mu(const std::array<Rational, 6>& mu);

// ---------------------------------------------------------------------------
// Omega^- closure

template <class S>
struct ClosureData {
  S alpha_plus, alpha_minus, beta_plus, beta_minus;
  bool closed = false;
};

template <class S>
ClosureData<S> closure_constants(const GroupData& g, const BracketParams<S>& p) {
  S eps = from_int<S>(g.eps);
  ClosureData<S> d;
  d.alpha_plus = p.b[1] - p.b[2] + eps * (p.c[1] - p.c[2]);
  d.alpha_minus = p.b[1] - p.b[2] - eps * (p.c[1] - p.c[2]);
  d.beta_plus = p.b[6] + p.b[7] + eps * (p.c[6] + p.c[7]);
  d.beta_minus = p.b[6] + p.b[7] - eps * (p.c[6] + p.c[7]);
  return d;
}

/// Z^± and V^± of the Omega^± brackets.
SpaceTensor<Rational> z_tensor(const GroupData& g, const BracketParams<Rational>& p, int sign);
SpaceTensor<Rational> v_tensor(const GroupData& g, const BracketParams<Rational>& p, int sign);

/// Linear span of the components of Omega^- and of their products.
class OmegaMinusAlgebra {
 public:
  explicit OmegaMinusAlgebra(const GroupData& g);
  const std::vector<GrassPoly<Rational>>& generators() const { return gens_; }
  bool contains_degree2(const GrassPoly<Rational>& u) const { return u.zero() || deg2_.contains(coordinates(u)); }

 private:
  std::vector<GrassPoly<Rational>> gens_;
  Echelon<Rational, Mask> deg2_;
};

/// Closure verdict of {Omega^-_1, Omega^-_2} inside the Omega^- subalgebra.
ClosureData<Rational> closure_analysis(const BracketBasis& basis, const BracketParams<Rational>& p,
                                       const SpaceTensor<Rational>& r, const OmegaMinusAlgebra& alg);

// ---------------------------------------------------------------------------
// Jacobi on Omega^- against the CYBE defect

struct JaiReport {
  bool holds = false;
  std::size_t entries = 0;       // nonzero entries of the left-hand side
  std::size_t mismatches = 0;
};

/// {{W1,W2},W3} + cycle  ==  -[W1,[W2,[W3,C(r)]]_+]  with W = Omega^-, params 0.
JaiReport jai_identity(const GroupData& g, const SpaceTensor<Rational>& r);

/// Three-space Jacobiator tensor of the pure r-term bracket on Omega^-.
FormTensor<Rational> omega_minus_jacobiator(const GroupData& g, const GeneratorBracket<Rational>& b);

}  // namespace bicov
