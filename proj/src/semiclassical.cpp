#include "bicov/semiclassical.hpp"

#include <bit>
#include <stdexcept>

#include "bicov/hjet.hpp"

namespace bicov {

namespace {

SpaceTensor<Rational> derivative_at_one(const QTensor& t) {
  return t.map([](const LaurentQ& x) { return x.derivative_at_one(); });
}

std::size_t monomial_index(int u, int w, int v) {
  // u < w
  return static_cast<std::size_t>(u) * v - static_cast<std::size_t>(u) * (u + 1) / 2 + (w - u - 1);
}

QeReport qe_report(const SpaceTensor<Rational>& diff, const SpaceTensor<Rational>& k0, const Rational& quoted) {
  QeReport rep;
  rep.quoted = quoted;
  const auto& [k, x] = *k0.entries().begin();
  Rational c = diff.at_key(k) / x;
  if ((diff - c * k0).zero()) rep.computed = c;
  rep.holds = (diff - quoted * k0).zero();
  return rep;
}

struct FormsR {
  FormTensor<Rational> o1, o2, p, k;
};

FormsR forms(const SemiclassicalData& sd) {
  const int n = sd.group.n;
  return {omega<Rational>(n, 1), omega<Rational>(n, 2), lift(sd.p), lift(sd.k0)};
}

}  // namespace

std::size_t pair_index(int x, int y, int v) {
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(x) * v - static_cast<std::size_t>(x) * (x - 1) / 2 + (y - x);
}

SemiclassicalData semiclassical_expand(const RMatrixData& rm) {
  SemiclassicalData sd;
  sd.group = rm.group;
  const int n = rm.group.n;
  sd.p = flip<Rational>(n);
  sd.k0 = evaluate_at(rm.k, 1);
  sd.k1 = derivative_at_one(rm.k);
  sd.r_tilde = sd.p * derivative_at_one(rm.rhat);
  sd.r = sd.r_tilde - (sd.p - Rational(rm.group.eps) * sd.k0);
  return sd;
}

SpaceTensor<Rational> r_tilde_exponential(const RMatrixData& rm) {
  // q = e^hbar, s = e^{hbar/2}, truncated after the linear term
  const HJet<Rational> q_jet(1, 1), s_jet(1, Rational(1, 2));
  auto first = rm.rhat.map([&](const LaurentQ& x) {
    auto j = x.evaluate_base_in(x.base() == LaurentBase::q ? q_jet : s_jet);
    return j.order1;
  });
  return flip<Rational>(rm.group.n) * first;
}

std::array<QeReport, 2> qe_identities(const SemiclassicalData& sd) {
  const Rational eps(sd.group.eps), n(sd.group.n);
  const Rational quoted = -eps * (1 - eps * n);
  auto lhs1 = sd.k1 - eps * (sd.k1 * sd.p);
  auto lhs2 = sd.k1 - eps * (sd.p * sd.k1);
  auto d1 = lhs1 - sd.k0 * sd.r_tilde;
  auto d2 = lhs2 - swap_spaces(sd.r_tilde, 1, 2) * sd.k0;
  return {qe_report(d1, sd.k0, quoted), qe_report(d2, sd.k0, quoted)};
}

std::vector<NamedCheck> semiclassical_checks(const RMatrixData& rm, const SemiclassicalData& sd) {
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  add("order0 Rhat = P", evaluate_at(rm.rhat, 1) == sd.p);
  add("order0 K = K0", sd.k0 == k0_tensor(sd.group));
  add("CYBE r~", cybe_defect(sd.r_tilde).zero());
  auto qe = qe_identities(sd);
  add("qe first", qe[0].holds);
  add("qe second", qe[1].holds);
  add("r skew", is_skew(sd.r));
  auto defect = cybe_defect(sd.r);
  add("mYBE defect nonzero", !defect.zero());
  add("mYBE defect ad-invariant", ad_invariance_check(defect, sd.group));
  add("r~ parameterization independent", r_tilde_exponential(rm) == sd.r_tilde);
  return out;
}

FormTensor<Rational> g_tensor(const SemiclassicalData& sd) {
  auto f = forms(sd);
  const Rational eps(sd.group.eps);
  auto rt = r_term(sd.group, sd.r, f.o1, f.o2);
  auto sq = f.o1 * f.o1 + f.o2 * f.o2;
  auto kk = f.k * f.o1 * f.o2 + f.o1 * f.o2 * f.k + f.o1 * f.k * f.o2 + f.o2 * f.k * f.o1;
  FormTensor<Rational> g = f.p * sq - rt - kk * GrassPoly<Rational>(eps);
  return g;
}

GeneratorBracket<Rational> fgf_bracket(const SemiclassicalData& sd) {
  auto f = forms(sd);
  const GrassPoly<Rational> eps(Rational(sd.group.eps));
  auto t = r_term(sd.group, sd.r, f.o1, f.o2) - f.p * (f.o1 * f.o1 + f.o2 * f.o2) + (f.o1 * f.k * f.o2 + f.o2 * f.k * f.o1) * eps;
  return GeneratorBracket<Rational>::from_tensor(t.extended({1, 2}));
}

std::vector<GrassPoly<Rational>> gru_generators(const SemiclassicalData& sd) {
  auto f = forms(sd);
  auto t = f.k * f.o1 * f.o2 + f.o1 * f.o2 * f.k;
  std::vector<GrassPoly<Rational>> out;
  for (const auto& [k, v] : t.entries())
    if (!v.zero()) out.push_back(v);
  return out;
}

Extraction extract_order_h_bracket(const RelationSet& s, const SemiclassicalData& sd) {
  if (s.n != sd.group.n) throw std::invalid_argument("relation set and semiclassical data disagree on N");
  const int n = s.n, v = n * n;
  Extraction e;
  e.relations = s.rows.size();
  e.pairs = static_cast<std::size_t>(v) * (v + 1) / 2;
  e.monomials = static_cast<std::size_t>(v) * (v - 1) / 2;
  const int unknowns = static_cast<int>(e.pairs);
  const int rhs_cols = static_cast<int>(e.monomials);

  std::vector<std::pair<int, int>> mono_pairs(e.monomials);
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w) mono_pairs[monomial_index(u, w, v)] = {u, w};
  auto to_poly = [&](const SparseVec<Rational>& vec) {
    GrassPoly<Rational> p;
    for (const auto& [mono, c] : vec) {
      const auto [u, w] = mono_pairs[mono];
      p += GrassPoly<Rational>::generator(u) * GrassPoly<Rational>::generator(w, c);
    }
    return p;
  };

  Echelon<Rational> constraints;
  std::vector<SparseVec<Rational>> rhs_rows;
  for (const auto& row : s.rows) {
    SparseVec<Rational> coeffs, rhs, anti0;
    for (const auto& [k, c] : row.entries()) {
      const int x = key::row(k, 0) * n + key::col(k, 0);
      const int y = key::row(k, 1) * n + key::col(k, 1);
      const auto jet = hjet_of_laurent(c);
      // Omega_x Omega_y = theta_x theta_y + hbar/2 {x, y}
      coeffs.emplace_back(pair_index(x, y, v), jet.order0 / 2);
      if (x == y) continue;
      const int sign = x < y ? 1 : -1;
      const std::size_t mono = x < y ? monomial_index(x, y, v) : monomial_index(y, x, v);
      rhs.emplace_back(mono, sign * jet.order1);
      anti0.emplace_back(mono, sign * jet.order0);
    }
    canonicalize(coeffs);
    canonicalize(rhs);
    canonicalize(anti0);
    if (!anti0.empty() && constraints.insert(anti0)) e.constraints.push_back(to_poly(anti0));
    if (coeffs.empty() && rhs.empty()) continue;
    e.coefficient_rows.emplace_back(coeffs.begin(), coeffs.end());
    e.rhs.push_back(to_poly(rhs));
    rhs_rows.push_back(std::move(rhs));
  }
  e.order0_constraints = constraints.rank();

  Dense<Rational> m;
  for (std::size_t i = 0; i < rhs_rows.size(); ++i) {
    std::vector<Rational> line(unknowns + rhs_cols);
    for (const auto& [j, c] : e.coefficient_rows[i]) line[j] = c;
    for (const auto& [mono, c] : constraints.normal_form(rhs_rows[i])) line[unknowns + mono] = -c;
    m.push_back(std::move(line));
  }
  auto rr = row_reduce(std::move(m), unknowns);
  e.consistent = rr.consistent;
  e.rank = static_cast<std::size_t>(rr.rank());
  e.nullity = (e.pairs - e.rank) * (e.monomials - e.order0_constraints);

  std::vector<std::pair<int, int>> pair_of(e.pairs);
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y) pair_of[pair_index(x, y, v)] = {x, y};
  std::vector<GrassPoly<Rational>> values(e.pairs);
  if (e.consistent) {
    for (int col = 0; col < rhs_cols; ++col) {
      auto sol = particular_solution(rr, col);
      const auto [u, w] = mono_pairs[col];
      for (int j = 0; j < unknowns; ++j)
        if (!is_zero(sol[j])) values[j] += GrassPoly<Rational>::generator(u) * GrassPoly<Rational>::generator(w, sol[j]);
    }
  }
  e.particular = GeneratorBracket<Rational>(n);
  for (std::size_t j = 0; j < e.pairs; ++j) {
    const auto [x, y] = pair_of[j];
    e.particular.set(x, y, values[j]);
    e.particular.set(y, x, values[j]);
  }
  return e;
}

namespace {

SparseVec<Rational> degree2_coordinates(const GrassPoly<Rational>& p, int v) {
  SparseVec<Rational> out;
  for (const auto& [mask, c] : p.terms()) {
    if (std::popcount(mask) != 2) throw std::invalid_argument("expected a homogeneous degree-2 value");
    const int u = std::countr_zero(mask);
    const int w = std::countr_zero(mask & (mask - 1));
    out.emplace_back(monomial_index(u, w, v), c);
  }
  canonicalize(out);
  return out;
}

}  // namespace

bool solves(const Extraction& e, const GeneratorBracket<Rational>& b) {
  const int v = b.generators();
  Echelon<Rational> constraints;
  for (const auto& c : e.constraints) constraints.insert(degree2_coordinates(c, v));
  std::vector<std::pair<int, int>> pair_of(e.pairs);
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y) pair_of[pair_index(x, y, v)] = {x, y};
  for (std::size_t i = 0; i < e.coefficient_rows.size(); ++i) {
    GrassPoly<Rational> acc = e.rhs[i];
    for (const auto& [j, c] : e.coefficient_rows[i]) acc += b(pair_of[j].first, pair_of[j].second).scaled(c);
    if (!constraints.normal_form(degree2_coordinates(acc, v)).empty()) return false;
  }
  return true;
}

GenwComparison compare_with_genw(const Extraction& e, const SemiclassicalData& sd) {
  const int n = sd.group.n, v = n * n;
  const Rational eps(sd.group.eps);
  auto p0 = (eps / n) * sd.k0;
  auto left_factor = SpaceTensor<Rational>::identity(n, {1, 2}) - p0;
  auto g = g_tensor(sd).extended({1, 2});

  // matrix index a = (row space 1, row space 2)
  auto index_rows = [n](const SpaceTensor<Rational>& t) {
    std::map<int, std::vector<std::pair<int, Rational>>> out;
    for (const auto& [k, x] : t.entries())
      out[key::row(k, 0) * n + key::row(k, 1)].emplace_back(key::col(k, 0) * n + key::col(k, 1), x);
    return out;
  };
  auto by_row_left = index_rows(left_factor);
  auto p0_by_col = std::map<int, std::vector<std::pair<int, Rational>>>{};
  for (const auto& [k, x] : p0.entries())
    p0_by_col[key::col(k, 0) * n + key::col(k, 1)].emplace_back(key::row(k, 0) * n + key::row(k, 1), x);
  auto gen_of = [n](int a, int b) {
    return std::pair<int, int>{(a / n) * n + (b / n), (a % n) * n + (b % n)};
  };
  auto g_at = [&](int a, int b) { return g.at({{a / n, b / n}, {a % n, b % n}}); };

  std::vector<SparseVec<Rational>> genw_rows;
  std::vector<GrassPoly<Rational>> genw_const;
  const int nn = n * n;
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      SparseVec<Rational> row;
      GrassPoly<Rational> c;
      auto it = by_row_left.find(a);
      if (it != by_row_left.end())
        for (const auto& [cidx, x] : it->second) {
          auto [gx, gy] = gen_of(cidx, b);
          row.emplace_back(pair_index(gx, gy, v), x);
          c += g_at(cidx, b).scaled(x);
        }
      auto jt = p0_by_col.find(b);
      if (jt != p0_by_col.end())
        for (const auto& [cidx, x] : jt->second) {
          auto [gx, gy] = gen_of(a, cidx);
          row.emplace_back(pair_index(gx, gy, v), -x);
          c += g_at(a, cidx).scaled(-x);
        }
      canonicalize(row);
      if (row.empty() && c.zero()) continue;
      genw_rows.push_back(std::move(row));
      genw_const.push_back(std::move(c));
    }

  std::vector<SparseVec<Rational>> extracted;
  for (const auto& r : e.coefficient_rows) {
    SparseVec<Rational> row(r.begin(), r.end());
    canonicalize(row);
    extracted.push_back(std::move(row));
  }
  GenwComparison cmp;
  cmp.same_coefficient_span = same_span(extracted, genw_rows);

  std::vector<std::pair<int, int>> pair_of(static_cast<std::size_t>(v) * (v + 1) / 2);
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y) pair_of[pair_index(x, y, v)] = {x, y};
  cmp.particular_satisfies = true;
  for (std::size_t i = 0; i < genw_rows.size() && cmp.particular_satisfies; ++i) {
    GrassPoly<Rational> acc = genw_const[i];
    for (const auto& [j, x] : genw_rows[i]) {
      const auto [gx, gy] = pair_of[j];
      acc += e.particular(gx, gy).scaled(x);
    }
    cmp.particular_satisfies = acc.zero();
  }
  return cmp;
}

}  // namespace bicov
