#include "bicov/presets.hpp"

#include <stdexcept>
#include <tuple>

#include "bicov/random.hpp"

namespace bicov {

namespace {

using FT = FormTensor<MPoly>;

MPoly sym(const char* s) { return parse_mpoly(s); }


FT times(const MPoly& c, const FT& t);

struct Forms {
  FT o1, o2, t1, t2, p1, p2, m1, m2, perm, k, id;
  GrassPoly<MPoly> tr;
  MPoly eps, n, inv_n;

  explicit Forms(const GroupData& g) {
    o1 = omega<MPoly>(g.n, 1);
    o2 = omega<MPoly>(g.n, 2);
    t1 = omega_tilde<MPoly>(g, 1);
    t2 = omega_tilde<MPoly>(g, 2);
    p1 = o1 + t1;
    p2 = o2 + t2;
    m1 = o1 - t1;
    m2 = o2 - t2;
    perm = lift(flip<MPoly>(g.n));
    k = lift(convert_rational_tensor<MPoly>(k0_tensor(g)));
    id = lift(identity_on<MPoly>(g.n, {1, 2}));
    tr = trace_omega<MPoly>(g.n);
    eps = MPoly(g.eps);
    n = MPoly(g.n);
    inv_n = MPoly(Rational(1, g.n));
  }
  FT scalar(const MPoly& c) const { return id * GrassPoly<MPoly>(c); }
  FT x(const GroupData& g, const MPoly& a, const MPoly& b, const MPoly& c) const {
    return lift(x_structure<MPoly>(g, a, b, c));
  }
  FT squares() const { return o1 * o1 + o2 * o2; }
  FT tilde_squares() const { return t1 * t1 + t2 * t2; }
  FT plus_squares() const { return p1 * p1 + p2 * p2; }
};

FT times(const MPoly& c, const FT& t) { return t * GrassPoly<MPoly>(c); }

std::vector<AppendixTerm> terms_a1i(const Forms& f) {
  MPoly lead = -f.inv_n * (sym("2*b2") + f.eps * sym("c3") + f.n * sym("a2"));
  return {
      {"X1 lead", times(lead, f.squares())},
      {"a2 (W+)^2", times(sym("a2"), f.plus_squares())},
      {"c3 W+ K W+", times(sym("c3"), f.p1 * f.k * f.p2)},
      {"mu/N W^2", times(f.inv_n * sym("mu"), f.squares())},
      {"b2 P (W+)^2", times(sym("b2"), f.perm * f.plus_squares())},
      {"c6 [K, W+] tr", times(sym("c6"), f.k * f.p1 - f.p1 * f.k) * f.tr},
  };
}

std::vector<AppendixTerm> terms_a1ii(const Forms& f) {
  // b1 = -nu/2 and a2 = (nu - eps c3)/N
  MPoly b1 = sym("-1/2*nu");
  MPoly a2 = f.inv_n * (sym("nu") - f.eps * sym("c3"));
  MPoly lead = -f.inv_n * (MPoly(2) * b1 + f.eps * sym("c3") + f.n * a2);
  return {
      {"X1 lead", times(lead, f.squares())},
      {"a2 (W+)^2", times(a2, f.plus_squares())},
      {"c3 W+ K W+", times(sym("c3"), f.p1 * f.k * f.p2)},
      {"(2b1+nu) P (W+)^2", times(MPoly(2) * b1 + sym("nu"), f.perm * f.plus_squares())},
      {"-(b1+nu)(P W^2 + W~^2 P)", times(-(b1 + sym("nu")), f.perm * f.squares() + f.tilde_squares() * f.perm)},
      {"-eps nu/2 (K W^2 + W^2 K)", times(-f.eps * sym("1/2*nu"), f.k * f.squares() + f.squares() * f.k)},
      {"c6 [K, W+] tr", times(sym("c6"), f.k * f.p1 - f.p1 * f.k) * f.tr},
  };
}

std::vector<AppendixTerm> terms_a1iii(const Forms& f) {
  MPoly lead = -f.inv_n * (sym("2*b2") + f.eps * sym("c3") - sym("nu"));
  FT trace_part = times(-f.eps * sym("1/2*c6 + 1/2*c7"), f.perm * (f.p1 + f.p2)) + times(sym("c6"), f.k * f.p1) +
                  times(sym("c7"), f.p1 * f.k);
  return {
      {"lead (W+)^2", times(lead, f.plus_squares())},
      {"c3 W+ K W+", times(sym("c3"), f.p1 * f.k * f.p2)},
      {"b1 P (W+)^2", times(sym("b1"), f.perm * f.plus_squares())},
      {"trace part", trace_part * f.tr},
  };
}

std::vector<AppendixTerm> terms_a2(const GroupData& g, const Forms& f) {
  MPoly b3 = -f.eps * sym("c1 + c2");
  MPoly a6 = MPoly(Rational(-4, g.n)) * f.eps * sym("c6");
  FT x = f.scalar(a6) + times(f.eps * sym("c6"), f.perm) + times(sym("c6"), f.k);
  FT plus = f.p1 + f.p2;
  return {
      {"a1 (W-)^2", times(sym("a1"), f.m1 * f.m1 + f.m2 * f.m2)},
      {"c3 W- K W-", times(sym("c3"), f.m1 * f.k * f.m2)},
      {"-b3/2 P (W+1-W+2)(W-1-W-2)", times(MPoly(Rational(-1, 2)) * b3, f.perm * (f.p1 - f.p2) * (f.m1 - f.m2))},
      {"(-eps c1 P + c1 K) W^2", (times(-f.eps * sym("c1"), f.perm) + times(sym("c1"), f.k)) * f.squares()},
      {"W~^2 (eps c1 P + c2 K)", f.tilde_squares() * (times(f.eps * sym("c1"), f.perm) + times(sym("c2"), f.k))},
      {"(X W+ + W+ X) tr", (x * plus + plus * x) * f.tr},
  };
}

std::vector<AppendixTerm> terms_a3(const GroupData& g, const Forms& f) {
  MPoly b3 = -(f.n * sym("a3") + sym("2*b4"));
  FT ab = f.scalar(sym("a3")) + times(sym("b4"), f.perm);
  FT kk = times(sym("c1"), f.k);
  return {
      {"(-a3 - b4 P + c1 K) W^2", (kk - ab) * f.squares()},
      {"W~^2 (a3 + b4 P + c1 K)", f.tilde_squares() * (ab + kk)},
      {"(a3 + b4 P)(W+W-)", ab * (f.p1 * f.m1 + f.p2 * f.m2)},
      {"(mu + b3 P)(W~2 W1 + W~1 W2)", (f.scalar(sym("mu")) + times(b3, f.perm)) * (f.t2 * f.o1 + f.t1 * f.o2)},
      {"X6 (W~1 + W~2) tr", f.x(g, sym("a6"), sym("b6"), sym("c6")) * (f.t1 + f.t2) * f.tr},
      {"(W1 + W2) X7 tr", (f.o1 + f.o2) * f.x(g, sym("a7"), sym("b7"), sym("c7")) * f.tr},
  };
}

TraceShape expected_shape(std::string_view tag) {
  if (tag == "A2") return TraceShape::family_ii;
  if (tag == "A3") return TraceShape::family_iii;
  return TraceShape::family_i;
}

}  // namespace

const std::vector<std::string>& preset_tags() {
  static const std::vector<std::string> tags{"A1i", "A1ii", "A1iii", "A2", "A3"};
  return tags;
}

std::vector<AppendixTerm> appendix_terms(const GroupData& g, std::string_view tag) {
  Forms f(g);
  if (tag == "A1i") return terms_a1i(f);
  if (tag == "A1ii") return terms_a1ii(f);
  if (tag == "A1iii") return terms_a1iii(f);
  if (tag == "A2") return terms_a2(g, f);
  if (tag == "A3") return terms_a3(g, f);
  throw std::invalid_argument("unknown preset '" + std::string(tag) + "'");
}

FormTensor<MPoly> appendix_expression(const GroupData& g, std::string_view tag) {
  auto terms = appendix_terms(g, tag);
  FT sum = terms.front().value;
  for (std::size_t i = 1; i < terms.size(); ++i) sum = sum + terms[i].value;
  return sum;
}

AppendixPreset appendix_preset(const BracketBasis& basis, std::string_view tag) {
  const GroupData& g = basis.group;
  auto target = GeneratorBracket<MPoly>::from_tensor(appendix_expression(g, tag).extended({1, 2}));
  using Key = std::tuple<int, int, Mask>;
  const int v = g.n * g.n;
  std::vector<RationalColumn<Key>> cols(kParamSlots);
  for (int k = 0; k < kParamSlots; ++k)
    for (int a = 0; a < v; ++a)
      for (int b = 0; b < v; ++b)
        for (const auto& [m, x] : basis.slots[k](a, b).terms()) cols[k].emplace(Key{a, b, m}, x);
  std::map<Key, MPoly> rhs;
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      for (const auto& [m, x] : target(a, b).terms()) rhs.emplace(Key{a, b, m}, x);
  auto res = solve_combination<MPoly>(cols, rhs);
  if (!res.exact()) throw std::logic_error("preset " + std::string(tag) + " is not in the bracket family");
  AppendixPreset out;
  out.tag = std::string(tag);
  out.expected_shape = expected_shape(tag);
  std::uint32_t support = 0;
  for (int k = 0; k < kParamSlots; ++k) {
    out.params.slot(k) = res.coefficients[k];
    support |= res.coefficients[k].support();
  }
  for (int i = 0; i < kNumVars; ++i)
    if (support & (1u << i)) out.free_symbols.emplace_back(var_name(i));
  return out;
}

bool preset_expansion_matches(const BracketBasis& basis, const AppendixPreset& preset) {
  const GroupData& g = basis.group;
  auto expected = GeneratorBracket<MPoly>::from_tensor(appendix_expression(g, preset.tag).extended({1, 2}));
  auto built = combine(basis, preset.params, GeneratorBracket<Rational>(g.n));
  return built == expected;
}

BracketParams<MPoly> impose_form_iii(const GroupData& g, const BracketParams<MPoly>& p) {
  MPoly eps(g.eps);
  MPoly inv_n(Rational(1, g.n));
  MPoly c67 = eps * (sym("c6") + sym("c7"));
  std::map<int, MPoly> subs{{var_a(6), -inv_n * (sym("2*b6") + c67)}, {var_a(7), -inv_n * (sym("2*b7") + c67)}};
  BracketParams<MPoly> out;
  for (int k = 0; k < kParamSlots; ++k) out.slot(k) = p.slot(k).substitute(subs);
  return out;
}

TraceShape trace_bracket_shape(const BracketBasis& basis, const AppendixPreset& preset) {
  auto params = preset.tag == "A3" ? impose_form_iii(basis.group, preset.params) : preset.params;
  auto b = combine(basis, params, GeneratorBracket<Rational>(basis.group.n));
  return classify_mu(mu_extract(b, basis.group).mu);
}

BracketParams<Rational> specialize_preset(const AppendixPreset& preset, std::uint64_t seed) {
  return evaluate_params(preset.params, random_point(seed));
}

}  // namespace bicov
