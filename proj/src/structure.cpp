#include "bicov/structure.hpp"

namespace bicov {

std::vector<NamedCheck> structural_identities(const GroupData& g) {
  using F = FormTensor<Rational>;
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  const int n = g.n;
  auto tilde = [&](const F& m) { return tilde_in(m, 1, g.metric, g.metric_inv); };

  auto o = omega<Rational>(n, 1);
  auto t = omega_tilde<Rational>(g, 1);
  add("tilde involution", tilde(t) == o);
  add("tilde of Omega^2 = -(Omega~)^2", tilde(o * o) == F(n, {1}) - t * t);
  add("tilde antihomomorphism on odd matrices", tilde(o * t) == F(n, {1}) - tilde(t) * tilde(o));
  add("Omega- in the Lie algebra", tilde(omega_minus<Rational>(g, 1)) == F(n, {1}) - omega_minus<Rational>(g, 1));

  auto o1 = omega<Rational>(n, 1), o2 = omega<Rational>(n, 2);
  auto t1 = omega_tilde<Rational>(g, 1), t2 = omega_tilde<Rational>(g, 2);
  auto k0 = lift(k0_tensor(g));
  add("K0 Omega_1 = K0 Omega~_2", k0 * o1 == k0 * t2);
  add("K0 Omega_2 = K0 Omega~_1", k0 * o2 == k0 * t1);
  add("K0 (Omega_1 Omega~_1 + Omega_2 Omega~_2) = 0", (k0 * (o1 * t1 + o2 * t2)).zero());

  add("c5 term vanishes", x_term<Rational>(g, 5, k0).zero());
  auto p = symbolic_params();
  p.c[5] = parse_mpoly("c5");
  bool c5_free = true;
  try {
    require_c5_zero(p);
    c5_free = false;
  } catch (const std::invalid_argument&) {
  }
  add("c5 rejected by the constructor", c5_free);

  // tilde is linear, so X~(a,b,c) is fixed by the images of I, P and K0
  const MPoly a = parse_mpoly("a1"), b = parse_mpoly("b1"), c = parse_mpoly("c1"), eps(g.eps);
  auto conv = [](const SpaceTensor<Rational>& x) { return convert_rational_tensor<MPoly>(x); };
  auto lhs = conv(tilde_space(g, SpaceTensor<Rational>::identity(n, {1, 2}), 1)) * a +
             conv(tilde_space(g, flip<Rational>(n), 1)) * b + conv(tilde_space(g, k0_tensor(g), 1)) * c;
  add("X~(a,b,c) = X(a, eps c, eps b) in space 1", lhs == x_structure<MPoly>(g, a, eps * c, eps * b));
  auto lhs2 = conv(tilde_space(g, SpaceTensor<Rational>::identity(n, {1, 2}), 2)) * a +
              conv(tilde_space(g, flip<Rational>(n), 2)) * b + conv(tilde_space(g, k0_tensor(g), 2)) * c;
  add("X~(a,b,c) = X(a, eps c, eps b) in space 2", lhs2 == x_structure<MPoly>(g, a, eps * c, eps * b));

  auto tr = trace_omega<Rational>(n);
  add("(tr Omega)^2 = 0", (tr * tr).zero());
  return out;
}

}  // namespace bicov
