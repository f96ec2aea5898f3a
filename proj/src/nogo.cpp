#include "bicov/nogo.hpp"

#include <tuple>

#include "bicov/combination.hpp"

namespace bicov {

namespace {

GrassPoly<Rational> from_coordinates(const SparseVec<Rational, Mask>& v) {
  std::vector<GrassPoly<Rational>::Term> terms(v.begin(), v.end());
  return GrassPoly<Rational>::from_terms(std::move(terms));
}

GeneratorBracket<Rational> symmetrized(const GeneratorBracket<Rational>& b) {
  GeneratorBracket<Rational> out(b.dim());
  const int v = b.generators();
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) out.set(x, y, (b(x, y) + b(y, x)).scaled(Rational(1, 2)));
  return out;
}

}  // namespace

OmegaMinusTraceReport omega_minus_trace_bracket(const GroupData& g, const GeneratorBracket<Rational>& b) {
  const int n = g.n;
  auto wm = omega_minus<Rational>(g, 1);
  auto entries = entries_of(wm);
  auto squares = entries_of(wm * wm);
  auto img = trace_images(b);
  OmegaMinusTraceReport rep{FormTensor<Rational>(n, {1}), FormTensor<Rational>(n, {1, 2})};
  for (int a = 0; a < n * n; ++a) {
    auto d = apply_trace_derivation(img, entries[a]) + squares[a].scaled(Rational(2));
    if (!d.zero()) rep.trace_defect.add({{a / n, a % n}}, d);
  }
  for (int a = 0; a < n * n; ++a)
    for (int c = 0; c < n * n; ++c) {
      auto val = leibniz_residual(b, img, entries[a], entries[c]);
      if (!val.zero()) rep.leibniz.add({{a / n, a % n}, {c / n, c % n}}, val);
    }
  return rep;
}

ResidualReport jacobi_modulo_ideal(const GeneratorBracket<Rational>& b, const std::vector<GrassPoly<Rational>>& gens) {
  const int v = b.generators();
  auto ideal = ideal_degree3(gens, v);
  ResidualReport rep;
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y)
      for (int z = y; z < v; ++z) {
        auto j = b.jacobiator(x, y, z);
        auto reduced = j.zero() ? j : from_coordinates(ideal.normal_form(coordinates(j)));
        record(rep, reduced, "triple " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
      }
  return rep;
}

std::optional<BracketParams<Rational>> family_parameters(const BracketBasis& basis, const GeneratorBracket<Rational>& b,
                                                        const SpaceTensor<Rational>& r) {
  using Key = std::tuple<int, int, Mask>;
  const int v = basis.group.n * basis.group.n;
  auto target = b - r_bracket(basis.group, r);
  std::vector<RationalColumn<Key>> cols(kParamSlots);
  for (int k = 0; k < kParamSlots; ++k)
    for (int a = 0; a < v; ++a)
      for (int c = 0; c < v; ++c)
        for (const auto& [m, x] : basis.slots[k](a, c).terms()) cols[k].emplace(Key{a, c, m}, x);
  std::map<Key, Rational> rhs;
  for (int a = 0; a < v; ++a)
    for (int c = 0; c < v; ++c)
      for (const auto& [m, x] : target(a, c).terms()) rhs.emplace(Key{a, c, m}, x);
  auto res = solve_combination<Rational>(cols, rhs);
  if (!res.exact()) return std::nullopt;
  BracketParams<Rational> p;
  for (int k = 0; k < kParamSlots; ++k) p.slot(k) = res.coefficients[k];
  return p;
}

FgfReport fgf_no_go(const SemiclassicalData& sd) {
  FgfReport rep;
  rep.group = sd.group;
  auto b = fgf_bracket(sd);
  rep.nilpotency = check_nilpotency(b);
  rep.jacobi = check_jacobi(b, true);
  rep.jacobi_mod_gru = jacobi_modulo_ideal(b, gru_generators(sd));
  rep.omega_minus = omega_minus_trace_bracket(sd.group, b);
  rep.params = family_parameters(make_bracket_basis(sd.group), b, sd.r);
  return rep;
}

ConstrainedPoissonReport constrained_poisson_check(const SemiclassicalData& sd) {
  ConstrainedPoissonReport rep;
  auto g = g_tensor(sd).extended({1, 2});
  auto b = GeneratorBracket<Rational>::from_tensor(g).scaled(Rational(-1));
  auto gens = gru_generators(sd);
  Echelon<Rational, Mask> span;
  for (const auto& p : gens) span.insert(coordinates(p));
  rep.symmetric = b.graded_symmetric();
  rep.symmetric_modulo_gru = true;
  const int v = b.generators();
  for (int x = 0; x < v && rep.symmetric_modulo_gru; ++x)
    for (int y = x + 1; y < v; ++y)
      if (!span.contains(coordinates(b(x, y) - b(y, x)))) {
        rep.symmetric_modulo_gru = false;
        break;
      }
  auto s = symmetrized(b);
  rep.jacobi_mod_gru = jacobi_modulo_ideal(s, gens);
  rep.jacobi = check_jacobi(s, true);
  return rep;
}

}  // namespace bicov
