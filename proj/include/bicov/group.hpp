#pragma once

// SO(N) and Sp(N) in the fundamental representation: metric, Lie algebra
// basis with its triangular decomposition, and the classical r-matrices.

#include <string>
#include <string_view>
#include <vector>

#include "bicov/scalar.hpp"
#include "bicov/tensor.hpp"

namespace bicov {

/// One named pass/fail outcome of an identity suite.
struct NamedCheck {
  std::string name;
  bool pass = false;
};

enum class Family { SO, Sp };

using Matrix = SpaceTensor<Rational>;  // single-space tensor on label 1

struct GroupData {
  Family family = Family::SO;
  int n = 0;
  int eps = 1;                 // +1 for SO, -1 for Sp
  std::vector<int> eps_i;      // per-index signs, all +1 for SO
  Matrix metric;               // C^{ij}
  Matrix metric_inv;           // C_{ij} = (C^{-1})_{ij}
  std::vector<Matrix> lie_basis;
  std::vector<Matrix> cartan_basis;
  std::vector<Matrix> npos_basis;  // strictly upper triangular members
  std::vector<Matrix> nneg_basis;  // strictly lower triangular members
  std::string tag() const;
  /// i' = N+1-i in 1-based terms.
  int prime(int i) const { return n - 1 - i; }
};

/// SO: N >= 4; Sp: N even >= 4. Throws std::invalid_argument otherwise.
GroupData build_group(Family family, int n);
/// "so5", "so7", "sp4", "sp6" (any soN / spN accepted by build_group).
GroupData group_from_tag(std::string_view tag);

/// X^t = -C X C^{-1}
bool in_lie_algebra(const GroupData& g, const Matrix& x);

/// Flip P_{ab}: entry ((i,j),(k,l)) = delta_il delta_jk.
template <class S>
SpaceTensor<S> flip(int n, int a = 1, int b = 2) {
  SpaceTensor<S> t(n, {std::min(a, b), std::max(a, b)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.add({{i, j}, {j, i}}, from_int<S>(1));
  return t;
}

/// K0_{ab}: entry ((i1,j1),(i2,j2)) = C^{i1 i2} C_{j1 j2}.
SpaceTensor<Rational> k0_tensor(const GroupData& g, int a = 1, int b = 2);

/// Partial tilde in one space of a multi-space tensor: C_s X^{t_s} C_s^{-1}.
SpaceTensor<Rational> tilde_space(const GroupData& g, const SpaceTensor<Rational>& x, int label);

/// X^{(i)} = a I + b P + c K0 on spaces {1,2}.
template <class S>
SpaceTensor<S> x_structure(const GroupData& g, const S& a, const S& b, const S& c) {
  auto conv = [](const Rational& r) { return from_rational<S>(r); };
  SpaceTensor<S> t = SpaceTensor<S>::identity(g.n, {1, 2}) * a;
  t += flip<S>(g.n) * b;
  t += k0_tensor(g).map(conv) * c;
  return t;
}

struct ClassicalR {
  enum class Kind { quasitriangular, triangular };
  SpaceTensor<Rational> r;  // on spaces {1,2}
  Kind kind = Kind::quasitriangular;
};

/// r = 1/2 sum (e_mu (x) f_mu - f_mu (x) e_mu), f dual to e under the trace form.
ClassicalR standard_r(const GroupData& g);
/// r = x (x) y - y (x) x for commuting Cartan elements.
ClassicalR abelian_r(const GroupData& g, const Matrix& x, const Matrix& y);
/// Default pair: the first two Cartan basis elements.
ClassicalR abelian_r(const GroupData& g);

/// C(r) = [r12, r23 + r13] + [r13, r23]
SpaceTensor<Rational> cybe_defect(const SpaceTensor<Rational>& r);

/// sum_s [t_s, X] == 0 for every t in the Lie basis.
bool ad_invariance_check(const SpaceTensor<Rational>& x, const GroupData& g);

/// Both slots of a two-space tensor lie in the Lie algebra.
bool slots_in_lie_algebra(const GroupData& g, const SpaceTensor<Rational>& r);

bool is_skew(const SpaceTensor<Rational>& r);

}  // namespace bicov
