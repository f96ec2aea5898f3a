#include "bicov/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "bicov/linalg.hpp"

namespace bicov {

namespace {

Matrix elementary(int n, int i, int j, const Rational& v = 1) { return unit_matrix<Rational>(n, 1, i, j, v); }

SparseVec<Rational, std::uint64_t> flatten(const SpaceTensor<Rational>& m) {
  SparseVec<Rational, std::uint64_t> v;
  for (const auto& [k, x] : m.entries()) v.emplace_back(k, x);
  return v;
}

Matrix transpose(const Matrix& m) { return transpose_in(m, 1); }

Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational acc = 0;
  const Matrix prod = a * b;
  for (const auto& [k, x] : prod.entries())
    if (key::row(k, 0) == key::col(k, 0)) acc += x;
  return acc;
}

// Inverse of a small dense rational matrix by Gauss-Jordan.
Dense<Rational> invert(const Dense<Rational>& g) {
  const int n = static_cast<int>(g.size());
  Dense<Rational> aug(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = g[i][j];
    aug[i][n + i] = 1;
  }
  auto rr = row_reduce(aug, n);
  if (rr.rank() != n) throw std::runtime_error("degenerate Gram matrix");
  Dense<Rational> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = rr.matrix[i][n + j];
  return inv;
}

SpaceTensor<Rational> outer(const Matrix& x, const Matrix& y) { return x * relabel(y, {{1, 2}}); }

}  // namespace

std::string GroupData::tag() const { return (family == Family::SO ? "so" : "sp") + std::to_string(n); }

GroupData build_group(Family family, int n) {
  if (n < 4 || n > kMaxDim) throw std::invalid_argument("group dimension must be at least 4");
  if (family == Family::Sp && n % 2 != 0) throw std::invalid_argument("Sp(N) needs even N");
  GroupData g;
  g.family = family;
  g.n = n;
  g.eps = family == Family::SO ? 1 : -1;
  g.eps_i.assign(n, 1);
  if (family == Family::Sp)
    for (int i = n / 2; i < n; ++i) g.eps_i[i] = -1;
  g.metric = Matrix(n, {1});
  for (int i = 0; i < n; ++i) g.metric.add({{i, g.prime(i)}}, g.eps_i[i]);
  // C^2 = eps I, so C^{-1} = eps C
  g.metric_inv = g.metric * Rational(g.eps);

  Echelon<Rational, std::uint64_t> span;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = elementary(n, i, j);
      Matrix x = e - g.metric * transpose(e) * g.metric_inv;
      if (x.zero() || !span.insert(flatten(x))) continue;
      g.lie_basis.push_back(x);
      if (i == j)
        g.cartan_basis.push_back(x);
      else if (i < j)
        g.npos_basis.push_back(x);
      else
        g.nneg_basis.push_back(x);
    }
  std::size_t expected = family == Family::SO ? n * (n - 1) / 2 : n * (n + 1) / 2;
  if (g.lie_basis.size() != expected) throw std::logic_error("Lie basis has the wrong dimension");
  for (const auto& x : g.lie_basis)
    if (!in_lie_algebra(g, x)) throw std::logic_error("Lie basis element outside the algebra");
  return g;
}

GroupData group_from_tag(std::string_view tag) {
  if (tag.size() < 3) throw std::invalid_argument("unknown group tag");
  std::string_view fam = tag.substr(0, 2);
  int n = 0;
  auto rest = tag.substr(2);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) throw std::invalid_argument("unknown group tag");
  if (fam == "so") return build_group(Family::SO, n);
  if (fam == "sp") return build_group(Family::Sp, n);
  throw std::invalid_argument("unknown group tag");
}

bool in_lie_algebra(const GroupData& g, const Matrix& x) {
  return transpose(x) + g.metric * x * g.metric_inv == Matrix(g.n, {1});
}

SpaceTensor<Rational> k0_tensor(const GroupData& g, int a, int b) {
  SpaceTensor<Rational> t(g.n, {std::min(a, b), std::max(a, b)});
  for (const auto& [k1, c1] : g.metric.entries())
    for (const auto& [k2, c2] : g.metric_inv.entries()) {
      int i1 = key::row(k1, 0), i2 = key::col(k1, 0);
      int j1 = key::row(k2, 0), j2 = key::col(k2, 0);
      if (a < b)
        t.add({{i1, j1}, {i2, j2}}, c1 * c2);
      else
        t.add({{i2, j2}, {i1, j1}}, c1 * c2);
    }
  return t;
}

SpaceTensor<Rational> tilde_space(const GroupData& g, const SpaceTensor<Rational>& x, int label) {
  auto c = relabel(g.metric, {{1, label}});
  auto ci = relabel(g.metric_inv, {{1, label}});
  return c * transpose_in(x, label) * ci;
}

ClassicalR standard_r(const GroupData& g) {
  const auto& e = g.npos_basis;
  const auto& m = g.nneg_basis;
  const int k = static_cast<int>(e.size());
  Dense<Rational> gram(k, std::vector<Rational>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) gram[a][b] = trace_product(e[a], m[b]);
  Dense<Rational> inv = invert(gram);
  SpaceTensor<Rational> r(g.n, {1, 2});
  for (int mu = 0; mu < k; ++mu) {
    Matrix f(g.n, {1});
    for (int nu = 0; nu < k; ++nu)
      if (!is_zero(inv[nu][mu])) f += m[nu] * inv[nu][mu];
    r += (outer(e[mu], f) - outer(f, e[mu])) * Rational(1, 2);
  }
  return {r, ClassicalR::Kind::quasitriangular};
}

ClassicalR abelian_r(const GroupData& g, const Matrix& x, const Matrix& y) {
  Echelon<Rational, std::uint64_t> span;
  span.insert(flatten(x));
  if (x.zero() || !span.insert(flatten(y))) throw std::invalid_argument("abelian_r needs independent elements");
  if (!(x * y == y * x)) throw std::invalid_argument("abelian_r needs commuting elements");
  (void)g;
  return {outer(x, y) - outer(y, x), ClassicalR::Kind::triangular};
}

ClassicalR abelian_r(const GroupData& g) {
  if (g.cartan_basis.size() < 2) throw std::invalid_argument("rank too small for an abelian r-matrix");
  return abelian_r(g, g.cartan_basis[0], g.cartan_basis[1]);
}

SpaceTensor<Rational> cybe_defect(const SpaceTensor<Rational>& r) {
  auto r12 = r;
  auto r13 = relabel(r, {{2, 3}});
  auto r23 = relabel(r, {{1, 2}, {2, 3}});
  return commutator(r12, r23 + r13) + commutator(r13, r23);
}

bool ad_invariance_check(const SpaceTensor<Rational>& x, const GroupData& g) {
  for (const auto& t : g.lie_basis) {
    SpaceTensor<Rational> acc(g.n, x.spaces());
    for (int s : x.spaces()) {
      auto ts = relabel(t, {{1, s}});
      acc += commutator(ts, x);
    }
    if (!acc.zero()) return false;
  }
  return true;
}

bool slots_in_lie_algebra(const GroupData& g, const SpaceTensor<Rational>& r) {
  // Project each slot: contract the other slot against all unit matrices.
  for (int slot : r.spaces()) {
    int other = slot == r.spaces().front() ? r.spaces().back() : r.spaces().front();
    std::map<std::pair<int, int>, Matrix> pieces;
    for (const auto& [k, v] : r.entries()) {
      int po = r.position(other), ps = r.position(slot);
      auto& m = pieces.try_emplace({key::row(k, po), key::col(k, po)}, Matrix(g.n, {1})).first->second;
      m.add({{key::row(k, ps), key::col(k, ps)}}, v);
    }
    for (const auto& [idx, m] : pieces)
      if (!in_lie_algebra(g, m)) return false;
  }
  return true;
}

bool is_skew(const SpaceTensor<Rational>& r) { return (r + swap_spaces(r, 1, 2)).zero(); }

}  // namespace bicov
