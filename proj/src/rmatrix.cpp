#include "bicov/rmatrix.hpp"

#include <stdexcept>

namespace bicov {

namespace {

LaurentQ q_half(int twice_e) {
  if (twice_e % 2 == 0) return LaurentQ::q_power(twice_e / 2);
  return LaurentQ::half_q_power(twice_e);
}

QTensor simplified(const QTensor& t) {
  return t.map([](const LaurentQ& x) { return x.simplified(); });
}

QTensor identity12(int n) { return QTensor::identity(n, {1, 2}); }

bool vanishes(const QTensor& t) { return t.zero(); }

LaurentQ trace12(const QTensor& t) {
  LaurentQ acc;
  for (const auto& [k, v] : t.entries())
    if (key::row(k, 0) == key::col(k, 0) && key::row(k, 1) == key::col(k, 1)) acc += v;
  return acc.simplified();
}

}  // namespace

std::vector<int> twice_rho(const GroupData& g) {
  const int n = g.n, half = n / 2;
  std::vector<int> rho(n, 0);
  for (int i = 0; i < half; ++i) {
    rho[i] = g.family == Family::SO ? n - 2 - 2 * i : n - 2 * i;
    rho[n - 1 - i] = -rho[i];
  }
  return rho;
}

RMatrixData assemble_rmatrix(const GroupData& g) {
  const int n = g.n;
  const auto rho = twice_rho(g);
  RMatrixData rm;
  rm.group = g;
  rm.lambda = q_lambda();
  rm.nu = LaurentQ(g.eps) * LaurentQ::q_power(g.eps - n);
  rm.mu = LaurentQ(1) + LaurentQ(g.eps) * q_number(n - g.eps);

  // R_{12} (before the flip); entry ((i,k),(j,l)) is R^{ij}_{kl}
  QTensor r(n, {1, 2});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.add({{i, i}, {j, j}}, LaurentQ::q_power((i == j) - (i == g.prime(j))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      r.add({{i, j}, {j, i}}, rm.lambda);
      LaurentQ c = rm.lambda * q_half(rho[i] - rho[j]) * LaurentQ(g.eps_i[i] * g.eps_i[j]);
      r.add({{i, j}, {g.prime(i), g.prime(j)}}, -c);
    }
  rm.rhat = simplified(flip<LaurentQ>(n) * r);

  rm.cq = QTensor(n, {1});
  rm.cq_inv = QTensor(n, {1});
  for (int i = 0; i < n; ++i) {
    LaurentQ c = LaurentQ(g.eps_i[i]) * q_half(-rho[i]);
    rm.cq.add({{i, g.prime(i)}}, c);
    rm.cq_inv.add({{g.prime(i), i}}, LaurentQ(g.eps_i[i]) * q_half(rho[i]));
  }
  // K^{i1 i2}_{j1 j2} = C^{i1 i2} C_{j1 j2}
  rm.k = QTensor(n, {1, 2});
  for (const auto& [ka, a] : rm.cq.entries())
    for (const auto& [kb, b] : rm.cq_inv.entries())
      rm.k.add({{key::row(ka, 0), key::row(kb, 0)}, {key::col(ka, 0), key::col(kb, 0)}}, (a * b).simplified());

  const LaurentQ qp = LaurentQ::q_power(1), qm = LaurentQ::q_power(-1);
  rm.mu_plus_num = -(qm + rm.nu);
  rm.mu_minus_num = -(qp - rm.nu);
  rm.proj_den = (qp + qm) * rm.mu;
  const QTensor id = identity12(n);
  rm.p_plus_num = simplified(rm.mu * (rm.rhat + qm * id) + rm.mu_plus_num * rm.k);
  rm.p_minus_num = simplified(rm.mu * (qp * id - rm.rhat) + rm.mu_minus_num * rm.k);
  rm.p_zero_num = simplified((qp + qm) * rm.k);
  return rm;
}

std::vector<NamedCheck> validate_rmatrix(const RMatrixData& rm) {
  const int n = rm.group.n;
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  const QTensor& R = rm.rhat;
  const QTensor& K = rm.k;
  const QTensor id = identity12(n);

  auto r12 = R.extended({3});
  auto r23 = relabel(R, {{1, 2}, {2, 3}}).extended({1});
  add("braid", vanishes(simplified(r12 * r23 * r12 - r23 * r12 * r23)));
  // R - R^{-1} = lambda (1 - K), multiplied through by R
  auto rr = R * R;
  add("cubic", vanishes(simplified(rr - rm.lambda * R - id + rm.lambda * rm.nu * K)));
  add("KR=nuK", vanishes(simplified(K * R - rm.nu * K)));
  add("RK=nuK", vanishes(simplified(R * K - rm.nu * K)));
  add("K2=muK", vanishes(simplified(K * K - rm.mu * K)));

  const LaurentQ& d = rm.proj_den;
  const std::array<std::pair<const char*, const QTensor*>, 3> p{
      {{"P+", &rm.p_plus_num}, {"P-", &rm.p_minus_num}, {"P0", &rm.p_zero_num}}};
  for (const auto& [name, t] : p) add(std::string("idempotent ") + name, vanishes(simplified(*t * *t - d * *t)));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b)
        add(std::string("orthogonal ") + p[a].first + p[b].first, vanishes(simplified(*p[a].second * *p[b].second)));
  add("complete", vanishes(simplified(rm.p_plus_num + rm.p_minus_num + rm.p_zero_num - d * id)));

  const LaurentQ qp = LaurentQ::q_power(1), qm = LaurentQ::q_power(-1);
  add("ww sum", ((rm.mu_plus_num + rm.mu_minus_num) + (qp + qm)).simplified().zero());
  add("ww difference", (qp * rm.mu_plus_num - qm * rm.mu_minus_num + rm.nu * (qp + qm)).simplified().zero());
  return out;
}

RMatrixData build_rmatrix(const GroupData& g) {
  RMatrixData rm = assemble_rmatrix(g);
  rm.validation = validate_rmatrix(rm);
  for (const auto& c : rm.validation)
    if (!c.pass) throw std::runtime_error("R-matrix validation failed for " + g.tag() + ": " + c.name);
  return rm;
}

ProjectorRanks projector_ranks(const RMatrixData& rm) {
  auto rank_of = [&](const QTensor& num) {
    LaurentQ tr = trace12(num);
    Rational at = tr.evaluate_q(4) / rm.proj_den.evaluate_q(4);
    if (at.get_den() != 1) throw std::runtime_error("projector trace is not an integer");
    int rank = static_cast<int>(at.get_num().get_si());
    if (!(tr - LaurentQ(rank) * rm.proj_den).simplified().zero())
      throw std::runtime_error("projector trace depends on q");
    return rank;
  };
  return {rank_of(rm.p_plus_num), rank_of(rm.p_minus_num), rank_of(rm.p_zero_num)};
}

ProjectorRanks expected_ranks(const GroupData& g) {
  const int n = g.n;
  if (g.family == Family::Sp) return {n * (n + 1) / 2, n * (n - 1) / 2 - 1, 1};
  return {n * (n + 1) / 2 - 1, n * (n - 1) / 2, 1};
}

SpaceTensor<Rational> evaluate_at(const QTensor& t, const Rational& q0) {
  return t.map([&](const LaurentQ& x) { return x.evaluate_q(q0); });
}

}  // namespace bicov
