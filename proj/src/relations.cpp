#include "bicov/relations.hpp"

#include <map>
#include <sstream>

#include "bicov/parallel.hpp"

namespace bicov {

namespace {

using WordVec = std::map<std::uint32_t, LaurentQ>;  // word x * V + y
using WordMatrix = std::map<std::pair<int, int>, WordVec>;

struct Entry {
  int row, col;
  LaurentQ value;
};

std::vector<Entry> entries_of(const QTensor& t) {
  const int n = t.dim();
  std::vector<Entry> out;
  for (const auto& [k, v] : t.entries())
    out.push_back({key::row(k, 0) * n + key::row(k, 1), key::col(k, 0) * n + key::col(k, 1), v});
  return out;
}

void accumulate(WordVec& into, const WordVec& v, const LaurentQ& c) {
  for (const auto& [w, x] : v) {
    auto& slot = into[w];
    slot += c * x;
  }
}

void prune(WordMatrix& m) {
  for (auto it = m.begin(); it != m.end();) {
    auto& vec = it->second;
    for (auto jt = vec.begin(); jt != vec.end();) {
      jt->second = jt->second.simplified();
      jt = jt->second.zero() ? vec.erase(jt) : std::next(jt);
    }
    it = vec.empty() ? m.erase(it) : std::next(it);
  }
}

// Omega_2 T Omega_2
WordMatrix sandwich(const QTensor& t) {
  const int n = t.dim(), v = n * n;
  WordMatrix out;
  for (const auto& [k, c] : t.entries()) {
    const int a1 = key::row(k, 0), c2 = key::row(k, 1), b1 = key::col(k, 0), d2 = key::col(k, 1);
    for (int a2 = 0; a2 < n; ++a2)
      for (int b2 = 0; b2 < n; ++b2) {
        std::uint32_t w = static_cast<std::uint32_t>((a2 * n + c2) * v + d2 * n + b2);
        out[{a1 * n + a2, b1 * n + b2}][w] += c;
      }
  }
  prune(out);
  return out;
}

WordMatrix left(const QTensor& a, const WordMatrix& m) {
  std::map<int, std::vector<std::pair<int, const WordVec*>>> by_row;
  for (const auto& [rc, vec] : m) by_row[rc.first].emplace_back(rc.second, &vec);
  WordMatrix out;
  for (const auto& e : entries_of(a)) {
    auto it = by_row.find(e.col);
    if (it == by_row.end()) continue;
    for (const auto& [b, vec] : it->second) accumulate(out[{e.row, b}], *vec, e.value);
  }
  prune(out);
  return out;
}

WordMatrix right(const WordMatrix& m, const QTensor& b) {
  std::map<int, std::vector<std::pair<int, LaurentQ>>> by_row;
  for (const auto& e : entries_of(b)) by_row[e.row].emplace_back(e.col, e.value);
  WordMatrix out;
  for (const auto& [rc, vec] : m) {
    auto it = by_row.find(rc.second);
    if (it == by_row.end()) continue;
    for (const auto& [c, x] : it->second) accumulate(out[{rc.first, c}], vec, x);
  }
  prune(out);
  return out;
}

WordMatrix combine(const std::vector<std::pair<LaurentQ, const WordMatrix*>>& terms) {
  WordMatrix out;
  for (const auto& [c, m] : terms)
    for (const auto& [rc, vec] : *m) accumulate(out[rc], vec, c);
  prune(out);
  return out;
}

void append_rows(RelationSet& s, const WordMatrix& m) {
  const int n = s.n, v = n * n;
  for (const auto& [rc, vec] : m) {
    QTensor row(n, {1, 2});
    for (const auto& [w, c] : vec) {
      const int x = static_cast<int>(w) / v, y = static_cast<int>(w) % v;
      row.add({{x / n, x % n}, {y / n, y % n}}, c);
    }
    if (!row.zero()) s.rows.push_back(std::move(row));
  }
}

RelationSet make_set(const RMatrixData& rm, std::string name, const std::vector<const WordMatrix*>& parts) {
  RelationSet s{std::move(name), rm.group.n, {}};
  for (const auto* m : parts) append_rows(s, *m);
  return s;
}

LaurentQ q1() { return LaurentQ::q_power(1); }
LaurentQ qinv() { return LaurentQ::q_power(-1); }

std::string index_pair(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <std::uint64_t P>
PbwDims quotient_dims(const RelationSet& s, const Rational& q0, int max_degree) {
  const std::uint64_t v = static_cast<std::uint64_t>(s.n) * s.n;
  Echelon<Fp<P>> basis;
  for (auto& r : rows_mod_p<P>(s, q0)) basis.insert(std::move(r));
  PbwDims d;
  d.dim2 = v * v - basis.rank();
  if (max_degree < 3) return d;
  std::vector<SparseVec<Fp<P>>> rows;
  rows.reserve(2 * v * basis.rank());
  for (const auto& [lead, r] : basis.rows())
    for (std::uint64_t z = 0; z < v; ++z) {
      SparseVec<Fp<P>> a, b;
      for (const auto& [w, c] : r) {
        a.emplace_back(w * v + z, c);
        b.emplace_back(z * v * v + w, c);
      }
      canonicalize(a);
      rows.push_back(std::move(a));
      rows.push_back(std::move(b));
    }
  d.dim3 = v * v * v - component_rank(rows);
  return d;
}

}  // namespace

RelationSet relations_woronowicz(const RMatrixData& rm) {
  auto w = sandwich(rm.rhat);
  auto pp = right(left(rm.p_plus_num, w), rm.p_plus_num);
  auto mm = right(left(rm.p_minus_num, w), rm.p_minus_num);
  auto zz = right(left(rm.k, w), rm.k);
  return make_set(rm, "w19c", {&pp, &mm, &zz});
}

RelationSet relations_rel1(const RMatrixData& rm) {
  auto w = sandwich(rm.rhat);
  auto zp = right(left(rm.k, w), rm.p_plus_num);
  auto pz = right(left(rm.p_plus_num, w), rm.k);
  return make_set(rm, "rel1", {&zp, &pz});
}

RelationSet relations_unique(const RMatrixData& rm) {
  auto w = sandwich(rm.rhat);
  auto rwr = right(left(rm.rhat, w), rm.rhat);
  auto kw = left(rm.k, w);
  auto wk = right(w, rm.k);
  auto kwr = right(kw, rm.rhat);
  auto rwk = left(rm.rhat, wk);
  auto total = combine({{rm.mu, &rwr}, {rm.mu, &w}, {LaurentQ(-1), &kw}, {LaurentQ(-1), &wk}, {-rm.nu, &kwr}, {-rm.nu, &rwk}});
  return make_set(rm, "w22", {&total});
}

RelationSet relations_watamura(const RMatrixData& rm) {
  auto w = sandwich(rm.rhat);
  auto rwr = right(left(rm.rhat, w), rm.rhat);
  auto kw = left(rm.k, w);
  auto wk = right(w, rm.k);
  LaurentQ c = rm.nu * qinv() - LaurentQ(1);
  auto total = combine({{rm.mu, &rwr}, {rm.mu, &w}, {c, &kw}, {c, &wk}});
  return make_set(rm, "wat", {&total});
}

RelationSet relations_weighted_sum(const RMatrixData& rm) {
  auto w = sandwich(rm.rhat);
  auto pp = right(left(rm.p_plus_num, w), rm.p_plus_num);
  auto mm = right(left(rm.p_minus_num, w), rm.p_minus_num);
  auto zz = right(left(rm.k, w), rm.k);
  // X(00) enters as K W'RW' K (the weight cancels the K-parts of X(++), X(--) only then)
  LaurentQ c0 = q1() * rm.mu_plus_num * rm.mu_plus_num + qinv() * rm.mu_minus_num * rm.mu_minus_num;
  auto total = combine({{q1(), &pp}, {qinv(), &mm}, {-c0, &zz}});
  return make_set(rm, "weh", {&total});
}

RelationSet merge(const RelationSet& a, const RelationSet& b, std::string name) {
  if (a.n != b.n) throw std::invalid_argument("relation sets of different size");
  RelationSet out{std::move(name), a.n, a.rows};
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  return out;
}

bool proportional(const RelationSet& a, const RelationSet& b) {
  if (a.n != b.n || a.rows.size() != b.rows.size() || a.rows.empty()) return false;
  const auto& [k0, a0] = *a.rows.front().entries().begin();
  LaurentQ b0 = b.rows.front().at_key(k0);
  if (b0.zero()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    auto diff = (a.rows[i] * b0 - b.rows[i] * a0).map([](const LaurentQ& x) { return x.simplified(); });
    if (!diff.zero()) return false;
  }
  return true;
}

std::string export_relations(const RelationSet& s) {
  std::ostringstream os;
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    os << "# relation " << r + 1 << "\n";
    for (const auto& [k, c] : s.rows[r].entries())
      os << "(" << index_pair(key::row(k, 0), key::col(k, 0)) << "," << index_pair(key::row(k, 1), key::col(k, 1))
         << ") -> " << c.str() << "\n";
  }
  return os.str();
}

void check_sample(const RMatrixData& rm, const Rational& q0) {
  if (is_zero(q0)) throw std::invalid_argument("q sample must be nonzero");
  if (is_zero(rm.mu.evaluate_q(q0)) || is_zero(q0 + 1 / q0))
    throw std::invalid_argument("degenerate q sample " + q0.get_str());
}

SpanReport span_equal(const RMatrixData& rm, const RelationSet& a, const RelationSet& b,
                      const std::vector<Rational>& q_samples) {
  if (q_samples.size() < 2) throw std::invalid_argument("span comparison needs at least two q samples");
  for (const auto& q0 : q_samples) check_sample(rm, q0);
  auto run = [&](std::size_t i) {
    const Rational& q0 = q_samples[i / 2];
    SpanSample s;
    s.q = q0;
    s.prime = i % 2 == 0 ? "A" : "B";
    auto ranks = [&]<std::uint64_t P>() {
      auto ra = rows_mod_p<P>(a, q0);
      auto rb = rows_mod_p<P>(b, q0);
      s.rank_a = component_rank(ra);
      s.rank_b = component_rank(rb);
      ra.insert(ra.end(), rb.begin(), rb.end());
      s.rank_union = component_rank(ra);
    };
    if (i % 2 == 0)
      ranks.template operator()<kPrimeA>();
    else
      ranks.template operator()<kPrimeB>();
    return s;
  };
  SpanReport rep;
  rep.samples = parallel_map<SpanSample>(2 * q_samples.size(), run);
  rep.equal = true;
  rep.stable = true;
  for (const auto& s : rep.samples) {
    rep.equal &= s.equal();
    rep.stable &= s.rank_a == rep.samples.front().rank_a && s.rank_b == rep.samples.front().rank_b &&
                  s.rank_union == rep.samples.front().rank_union;
  }
  return rep;
}

PbwReport pbw_probe(const RMatrixData& rm, const RelationSet& s, int max_degree, const std::vector<Rational>& q_samples) {
  if (max_degree != 2 && max_degree != 3) throw std::invalid_argument("PBW probe degree must be 2 or 3");
  for (const auto& q0 : q_samples) check_sample(rm, q0);
  PbwReport rep;
  rep.relations = s.name;
  rep.max_degree = max_degree;
  rep.q_samples = q_samples;
  const std::size_t v = static_cast<std::size_t>(s.n) * s.n;
  rep.classical2 = binomial(v, 2);
  rep.classical3 = binomial(v, 3);
  rep.free2 = v * v;
  rep.free3 = v * v * v;

  std::vector<Rational> points = q_samples;
  points.emplace_back(1);
  auto dims = parallel_map<PbwDims>(2 * points.size(), [&](std::size_t i) {
    const Rational& q0 = points[i / 2];
    return i % 2 == 0 ? quotient_dims<kPrimeA>(s, q0, max_degree) : quotient_dims<kPrimeB>(s, q0, max_degree);
  });
  for (std::size_t p = 0; p < points.size(); ++p) {
    rep.primes_agree &= dims[2 * p] == dims[2 * p + 1];
    if (p + 1 < points.size())
      rep.at_q.push_back(dims[2 * p]);
    else
      rep.at_one = dims[2 * p];
  }
  for (const auto& d : rep.at_q) rep.stable &= d == rep.at_q.front();

  bool deg2_same = true, deg3_same = true;
  for (const auto& d : rep.at_q) {
    deg2_same &= d.dim2 == rep.at_one.dim2;
    deg3_same &= d.dim3 == rep.at_one.dim3;
  }
  const bool same_q = rep.matches_q_one = deg2_same && (max_degree == 2 || deg3_same);
  const bool classical = rep.matches_classical =
      rep.at_one.dim2 == rep.classical2 && (max_degree == 2 || rep.at_one.dim3 == rep.classical3);
  const std::string through = " through degree " + std::to_string(max_degree);
  rep.verdict = (same_q ? "generic q matches q=1" : "generic q differs from q=1") + through + "; " +
                (classical ? "matches the classical counts (PBW-compatible, not a proof)"
                           : "differs from the classical counts: not PBW");
  return rep;
}

}  // namespace bicov
