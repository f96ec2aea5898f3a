#include "bicov/invariants.hpp"

#include <array>
#include <map>

#include "bicov/linalg.hpp"
#include "bicov/modp.hpp"

namespace bicov {

namespace {

using Weight = std::vector<long>;
using Tuple = std::array<int, 4>;  // x <= y symmetric, u < w antisymmetric

struct Action {
  // image of generator index x under ad(L): (index, coefficient)
  std::vector<std::vector<std::pair<int, Rational>>> ad;
};

Action adjoint_action(const Matrix& l, int n) {
  Action a;
  a.ad.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<int, Rational> img;
      // [L, E_ij] = sum_c L_ci E_cj - sum_c E_ic L_jc
      for (int c = 0; c < n; ++c) {
        Rational left = l.at({{c, i}});
        if (!is_zero(left)) img[c * n + j] += left;
        Rational right = l.at({{j, c}});
        if (!is_zero(right)) img[i * n + c] -= right;
      }
      for (const auto& [k, v] : img)
        if (!is_zero(v)) a.ad[i * n + j].emplace_back(k, v);
    }
  return a;
}

/// Image of a basis tuple under a derivation, in canonical tuples.
std::map<Tuple, Rational> apply(const Action& a, const Tuple& t) {
  std::map<Tuple, Rational> out;
  auto put = [&](Tuple s, Rational c) {
    if (s[0] > s[1]) std::swap(s[0], s[1]);
    if (s[2] == s[3]) return;
    if (s[2] > s[3]) {
      std::swap(s[2], s[3]);
      c = -c;
    }
    out[s] += c;
  };
  for (int slot = 0; slot < 4; ++slot)
    for (const auto& [k, c] : a.ad[t[slot]]) {
      Tuple s = t;
      s[slot] = k;
      put(s, c);
    }
  return out;
}

template <std::uint64_t P>
std::size_t action_rank(const std::vector<Tuple>& basis, const std::vector<Action>& actions, int v) {
  Echelon<Fp<P>> e;
  auto code = [v](std::size_t which, const Tuple& t) {
    std::uint64_t k = which;
    for (int x : t) k = k * v + x;
    return k;
  };
  for (const auto& t : basis) {
    SparseVec<Fp<P>> col;
    for (std::size_t w = 0; w < actions.size(); ++w)
      for (const auto& [s, c] : apply(actions[w], t))
        if (!is_zero(c)) col.emplace_back(code(w, s), from_rational<Fp<P>>(c));
    canonicalize(col);
    e.insert(std::move(col));
  }
  return e.rank();
}

}  // namespace

InvariantCount invariant_count(const GroupData& g) {
  const int n = g.n, v = n * n;
  std::vector<Weight> wt(v, Weight(g.cartan_basis.size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < g.cartan_basis.size(); ++k) {
        Rational d = g.cartan_basis[k].at({{i, i}}) - g.cartan_basis[k].at({{j, j}});
        wt[i * n + j][k] = d.get_num().get_si();
      }
  auto zero_sum = [&](const Tuple& t) {
    for (std::size_t k = 0; k < g.cartan_basis.size(); ++k)
      if (wt[t[0]][k] + wt[t[1]][k] + wt[t[2]][k] + wt[t[3]][k] != 0) return false;
    return true;
  };
  std::vector<Tuple> basis;
  for (int x = 0; x < v; ++x)
    for (int y = x; y < v; ++y)
      for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
          if (zero_sum({x, y, u, w})) basis.push_back({x, y, u, w});
  std::vector<Action> actions;
  for (const auto& m : g.npos_basis) actions.push_back(adjoint_action(m, n));
  for (const auto& m : g.nneg_basis) actions.push_back(adjoint_action(m, n));

  InvariantCount out;
  out.weight_zero = basis.size();
  out.rank_a = action_rank<kPrimeA>(basis, actions, v);
  out.rank_b = action_rank<kPrimeB>(basis, actions, v);
  out.primes_agree = out.rank_a == out.rank_b;
  out.count = out.weight_zero - out.rank_a;
  return out;
}

}  // namespace bicov
