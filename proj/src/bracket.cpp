#include "bicov/bracket.hpp"

#include <map>

namespace bicov {

std::string slot_name(int k) {
  if (k < 0 || k >= kParamSlots) throw std::out_of_range("parameter slot");
  const char fam = "abc"[k / 7];
  return std::string(1, fam) + std::to_string(k % 7 + 1);
}

std::optional<int> slot_of(std::string_view name) {
  for (int k = 0; k < kParamSlots; ++k)
    if (slot_name(k) == name) return k;
  return std::nullopt;
}

BracketParams<MPoly> symbolic_params() {
  BracketParams<MPoly> p;
  for (int k = 0; k < kParamSlots; ++k) {
    if (k == kSlotC5) continue;
    p.slot(k) = MPoly::variable(slot_name(k));
  }
  return p;
}

BracketParams<Rational> evaluate_params(const BracketParams<MPoly>& p, const std::array<Rational, kNumVars>& at) {
  BracketParams<Rational> out;
  for (int k = 0; k < kParamSlots; ++k) out.slot(k) = p.slot(k).evaluate(at);
  return out;
}

GeneratorBracket<Rational> r_bracket(const GroupData& g, const SpaceTensor<Rational>& r) {
  auto o1 = omega<Rational>(g.n, 1), o2 = omega<Rational>(g.n, 2);
  FormTensor<Rational> t = r_term(g, r, o1, o2);
  return GeneratorBracket<Rational>::from_tensor(t.extended({1, 2}));
}

BracketBasis make_bracket_basis(const GroupData& g) {
  BracketBasis basis{g, {}};
  for (int k = 0; k < kParamSlots; ++k) {
    if (k == kSlotC5) {
      basis.slots.emplace_back(g.n);
      continue;
    }
    BracketParams<Rational> p;
    p.slot(k) = 1;
    const int term = k % 7 + 1;
    auto x = lift(x_structure<Rational>(g, p.a[term], p.b[term], p.c[term]));
    auto t = x_term(g, term, x);
    basis.slots.push_back(GeneratorBracket<Rational>::from_tensor(t.extended({1, 2})));
  }
  return basis;
}

std::array<FormTensor<Rational>, 6> trace_structures(const GroupData& g) {
  auto o = omega<Rational>(g.n, 1);
  auto t = omega_tilde<Rational>(g, 1);
  GrassPoly<Rational> tr = trace_omega<Rational>(g.n);
  return {o * o, t * t, t * o, o * t, t * tr, o * tr};
}

std::vector<GrassPoly<Rational>> entries_of(const FormTensor<Rational>& m) {
  if (m.spaces().size() != 1) throw std::invalid_argument("entries_of expects a single-space form matrix");
  std::vector<GrassPoly<Rational>> out(m.dim() * m.dim());
  for (const auto& [k, v] : m.entries()) out[generator_index(m.dim(), key::row(k, 0), key::col(k, 0))] = v;
  return out;
}

std::array<MPoly, 6> k4_polynomials(const GroupData& g) {
  auto v = [](const char* s) { return parse_mpoly(s); };
  MPoly e(g.eps), n(g.n);
  return {
      MPoly(2) * v("b1") + e * (v("c1") - v("c2") + v("c4")) + n * v("a1"),
      e * (v("c2") - v("c1") + v("c4")) + MPoly(2) * v("b2") + n * v("a2"),
      e * v("c3") + v("b3") + MPoly(2) * v("b4") + n * v("a3"),
      e * v("c3") - v("b3") + MPoly(2) * v("b5") + n * v("a5"),
      v("a4") + n * v("a6") + MPoly(2) * v("b6") + e * (v("c6") + v("c7")),
      -v("a4") + n * v("a7") + MPoly(2) * v("b7") + e * (v("c6") + v("c7")),
  };
}

std::string to_string(TraceShape s) {
  switch (s) {
    case TraceShape::family_i: return "i";
    case TraceShape::family_ii: return "ii";
    case TraceShape::family_iii: return "iii";
    case TraceShape::family_iv: return "iv";
    default: return "none";
  }
}

namespace {

template <class S>
TraceShape classify(const std::array<S, 6>& m) {
  auto z = [](const S& x) { return is_zero(x); };
  bool all_zero = true;
  for (const auto& x : m) all_zero &= z(x);
  if (all_zero) return TraceShape::family_iv;
  bool tail_zero = z(m[4]) && z(m[5]);
  if (tail_zero && z(m[1] - m[2]) && z(m[1] - m[3])) return TraceShape::family_i;
  if (tail_zero && z(m[0] - m[1]) && z(m[2] + m[0]) && z(m[3] + m[0]) && !z(m[0])) return TraceShape::family_ii;
  if (z(m[0]) && z(m[1]) && z(m[2]) && z(m[3]) && z(m[4] + m[5]) && !z(m[4])) return TraceShape::family_iii;
  return TraceShape::none;
}

}  // namespace

TraceShape classify_mu(const std::array<MPoly, 6>& mu) { return classify(mu); }
TraceShape classify_mu(const std::array<Rational, 6>& mu) { return classify(mu); }

SpaceTensor<Rational> z_tensor(const GroupData& g, const BracketParams<Rational>& p, int sign) {
  auto x = x_structure<Rational>(g, p.a[1], p.b[1], p.c[1]) - x_structure<Rational>(g, p.a[2], p.b[2], p.c[2]);
  return sign > 0 ? x + tilde_space(g, x, 1) : x - tilde_space(g, x, 1);
}

SpaceTensor<Rational> v_tensor(const GroupData& g, const BracketParams<Rational>& p, int sign) {
  auto x = x_structure<Rational>(g, p.a[6], p.b[6], p.c[6]) + x_structure<Rational>(g, p.a[7], p.b[7], p.c[7]);
  return sign > 0 ? x + tilde_space(g, x, 1) : x - tilde_space(g, x, 1);
}

OmegaMinusAlgebra::OmegaMinusAlgebra(const GroupData& g) {
  Echelon<Rational, Mask> span;
  for (const auto& e : entries_of(omega_minus<Rational>(g, 1)))
    if (!e.zero() && span.insert(coordinates(e))) gens_.push_back(e);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j) deg2_.insert(coordinates(gens_[i] * gens_[j]));
}

ClosureData<Rational> closure_analysis(const BracketBasis& basis, const BracketParams<Rational>& p,
                                       const SpaceTensor<Rational>& r, const OmegaMinusAlgebra& alg) {
  auto b = build_bracket(basis, p, r);
  auto d = closure_constants(basis.group, p);
  d.closed = true;
  const auto& gens = alg.generators();
  for (std::size_t i = 0; i < gens.size() && d.closed; ++i)
    for (std::size_t j = i; j < gens.size() && d.closed; ++j)
      if (!alg.contains_degree2(b(gens[i], gens[j]))) d.closed = false;
  return d;
}

FormTensor<Rational> omega_minus_jacobiator(const GroupData& g, const GeneratorBracket<Rational>& b) {
  auto w = entries_of(omega_minus<Rational>(g, 1));
  std::map<std::array<int, 3>, GrassPoly<Rational>> cache;
  auto jac = [&](int x, int y, int z) -> const GrassPoly<Rational>& {
    std::array<int, 3> k{x, y, z};
    std::sort(k.begin(), k.end());
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, b.jacobiator(k[0], k[1], k[2])).first;
    return it->second;
  };
  const int n = g.n;
  FormTensor<Rational> out(n, {1, 2, 3});
  for (int e1 = 0; e1 < n * n; ++e1)
    for (int e2 = 0; e2 < n * n; ++e2)
      for (int e3 = 0; e3 < n * n; ++e3) {
        GrassPoly<Rational> acc;
        for (const auto& [m1, c1] : w[e1].terms())
          for (const auto& [m2, c2] : w[e2].terms())
            for (const auto& [m3, c3] : w[e3].terms()) {
              const auto& j = jac(std::countr_zero(m1), std::countr_zero(m2), std::countr_zero(m3));
              if (!j.zero()) acc += j.scaled(c1 * c2 * c3);
            }
        if (!acc.zero())
          out.add({{e1 / n, e1 % n}, {e2 / n, e2 % n}, {e3 / n, e3 % n}}, acc);
      }
  return out;
}

JaiReport jai_identity(const GroupData& g, const SpaceTensor<Rational>& r) {
  auto b = r_bracket(g, r);
  auto lhs = omega_minus_jacobiator(g, b);
  auto c = lift(cybe_defect(r));
  auto w1 = omega_minus<Rational>(g, 1), w2 = omega_minus<Rational>(g, 2), w3 = omega_minus<Rational>(g, 3);
  auto x = w3 * c - c * w3;
  auto y = w2 * x + x * w2;
  auto z = w1 * y - y * w1;
  FormTensor<Rational> rhs = -z;
  JaiReport rep;
  rep.entries = lhs.size();
  auto diff = lhs - rhs.extended({1, 2, 3});
  rep.mismatches = diff.size();
  rep.holds = diff.zero();
  return rep;
}

}  // namespace bicov
