// Acceptance run: one line per criterion, with wall time against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bicov/invariants.hpp"
#include "bicov/nogo.hpp"
#include "bicov/presets.hpp"
#include "bicov/random.hpp"
#include "bicov/structure.hpp"

using namespace bicov;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool known_deviation = false;  // failure recorded as unattainable, shape checked below
};

void fail_with(Outcome& o, const std::string& what) {
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

const char* kGroups[] = {"sp4", "so5"};

Outcome structural() {
  Outcome o;
  for (const char* tag : kGroups)
    for (const auto& c : structural_identities(group_from_tag(tag)))
      if (!c.pass) fail_with(o, std::string(tag) + ": " + c.name);
  return o;
}

Outcome k4() {
  Outcome o;
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    auto mu = mu_extract(build_bracket(make_bracket_basis(g), symbolic_params(), standard_r(g).r), g);
    auto expected = k4_polynomials(g);
    if (!mu.shape_ok) fail_with(o, std::string(tag) + ": trace bracket off the six structures");
    for (int i = 0; i < 6; ++i)
      if (!(mu.mu[i] == expected[i])) fail_with(o, std::string(tag) + ": mu" + std::to_string(i + 1));
  }
  return o;
}

Outcome k5() {
  Outcome o;
  const MPoly m = parse_mpoly("mu"), n = parse_mpoly("nu"), z(0);
  const std::array<std::array<MPoly, 6>, 4> families{{
      {m, n, n, n, z, z},
      {m, m, -m, -m, z, z},
      {z, z, z, z, m, -m},
      {z, z, z, z, z, z},
  }};
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    for (std::size_t f = 0; f < families.size(); ++f)
      if (!check_nilpotency_images(images_from_mu(g, families[f])).vanishes())
        fail_with(o, std::string(tag) + ": family " + std::to_string(f + 1) + " fails nil");
    Rng rng(20240611);
    int failed = 0;
    for (int t = 0; t < 1000; ++t) {
      std::array<Rational, 6> mu;
      for (auto& x : mu) x = random_rational(rng);
      if (classify_mu(mu) != TraceShape::none) continue;
      failed += !check_nilpotency_images(images_from_mu(g, mu)).vanishes();
    }
    o.detail += std::string(o.detail.empty() ? "" : ", ") + tag + " " + std::to_string(failed) + "/1000 off-family fail";
    if (failed != 1000) fail_with(o, std::string(tag) + ": some off-family tuple passes nil");
  }
  return o;
}

Outcome presets_symbolic() {
  Outcome o;
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    auto basis = make_bracket_basis(g);
    for (const auto& p : preset_tags()) {
      auto preset = appendix_preset(basis, p);
      const std::string where = std::string(tag) + " " + p;
      if (!preset_expansion_matches(basis, preset)) fail_with(o, where + ": expansion");
      auto b = build_bracket(basis, preset.params, standard_r(g).r);
      if (!check_nilpotency(b).vanishes()) fail_with(o, where + ": nil");
      if (!check_leibniz(b).vanishes()) fail_with(o, where + ": dd");
    }
  }
  return o;
}

Outcome presets_randomized() {
  Outcome o;
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    auto basis = make_bracket_basis(g);
    for (const auto& p : preset_tags()) {
      auto preset = appendix_preset(basis, p);
      for (std::uint64_t seed : {1, 2, 3}) {
        auto b = build_bracket(basis, specialize_preset(preset, seed), standard_r(g).r);
        const std::string where = std::string(tag) + " " + p + " seed " + std::to_string(seed);
        if (!check_nilpotency(b).vanishes()) fail_with(o, where + ": nil");
        if (!check_leibniz(b).vanishes()) fail_with(o, where + ": dd");
      }
    }
  }
  return o;
}

Outcome headline() {
  Outcome o;
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    auto basis = make_bracket_basis(g);
    for (const auto& p : preset_tags()) {
      auto preset = appendix_preset(basis, p);
      for (std::uint64_t seed : {11, 12, 13}) {
        auto b = build_bracket(basis, specialize_preset(preset, seed), standard_r(g).r);
        if (check_jacobi(b, true).vanishes())
          fail_with(o, std::string(tag) + " " + p + " seed " + std::to_string(seed) + ": Jacobi residual is zero");
      }
    }
  }
  return o;
}

Outcome dichotomy() {
  Outcome o;
  for (const char* tag : kGroups) {
    auto g = group_from_tag(tag);
    auto basis = make_bracket_basis(g);
    if (!check_jacobi(build_bracket(basis, BracketParams<Rational>(), abelian_r(g).r)).vanishes())
      fail_with(o, std::string(tag) + ": abelian r fails Jacobi");
    if (check_jacobi(build_bracket(basis, BracketParams<Rational>(), standard_r(g).r), true).vanishes())
      fail_with(o, std::string(tag) + ": standard r passes Jacobi");
    if (!jai_identity(g, standard_r(g).r).holds) fail_with(o, std::string(tag) + ": jai");
  }
  return o;
}

Outcome quantum() {
  Outcome o;
  const std::pair<const char*, ProjectorRanks> expected[] = {{"sp4", {10, 5, 1}}, {"so5", {14, 10, 1}}};
  for (const auto& [tag, ranks] : expected) {
    auto rm = assemble_rmatrix(group_from_tag(tag));
    for (const auto& c : validate_rmatrix(rm))
      if (!c.pass) fail_with(o, std::string(tag) + ": " + c.name);
    auto r = projector_ranks(rm);
    if (r.plus != ranks.plus || r.minus != ranks.minus || r.zero != ranks.zero)
      fail_with(o, std::string(tag) + ": ranks " + std::to_string(r.plus) + "," + std::to_string(r.minus) + "," +
                       std::to_string(r.zero));
  }
  return o;
}

Outcome spans(const char* tag) {
  Outcome o;
  auto rm = build_rmatrix(group_from_tag(tag));
  const std::vector<Rational> qs{Rational(4), Rational(9, 4)};
  auto w19 = relations_woronowicz(rm);
  auto check = [&](const SpanReport& r, const std::string& what) {
    std::size_t primes_a = 0, primes_b = 0;
    for (const auto& s : r.samples) (s.prime == "A" ? primes_a : primes_b) += 1;
    if (!r.equal || !r.stable || primes_a < 2 || primes_b < 2) fail_with(o, std::string(tag) + ": " + what);
  };
  check(span_equal(rm, w19, relations_unique(rm), qs), "w19c vs w22");
  check(span_equal(rm, merge(w19, relations_rel1(rm), "w19c+rel1"), relations_watamura(rm), qs), "w19c+rel1 vs wat");
  return o;
}

Outcome semiclassical() {
  Outcome o;
  std::vector<std::string> failures;
  for (const char* tag : kGroups) {
    auto rm = build_rmatrix(group_from_tag(tag));
    auto sd = semiclassical_expand(rm);
    auto note = [&](bool ok, const std::string& what) {
      if (!ok) failures.push_back(std::string(tag) + ": " + what);
    };
    for (const auto& c : semiclassical_checks(rm, sd)) note(c.pass, c.name);
    auto w22 = extract_order_h_bracket(relations_unique(rm), sd);
    note(w22.consistent && compare_with_genw(w22, sd).reproduces(), "w22 extraction reproduces genw");
    note(w22.nullity > 0, "w22 nullity positive");
    auto wat = extract_order_h_bracket(relations_watamura(rm), sd);
    note(wat.unique() && wat.particular == fgf_bracket(sd), "wat extraction = fgf");
    auto r = fgf_no_go(sd);
    note(!r.nilpotency.vanishes(), "fgf fails nil");
    note(!r.jacobi.vanishes(), "fgf fails Jacobi");
    note(r.omega_minus.trace_identity(), "{W-,trW} = -2(W-)^2");
    note(!r.omega_minus.leibniz_vanishes(), "fgf fails W- restricted dd");
    note(r.jacobi_mod_gru.vanishes(), "fgf Jacobiator in gru ideal");
  }
  for (const auto& f : failures) fail_with(o, f);
  // recorded as unattainable: Sp(4) keeps classical constraints at q = 1
  o.known_deviation = failures == std::vector<std::string>{"sp4: wat extraction = fgf"};
  return o;
}

Outcome pbw() {
  Outcome o;
  auto rm = build_rmatrix(group_from_tag("sp4"));
  for (const auto& [label, set] : {std::pair{"w22", relations_unique(rm)}, std::pair{"wat", relations_watamura(rm)}}) {
    auto rep = pbw_probe(rm, set, 3, {Rational(4), Rational(9, 4)});
    if (!rep.primes_agree || !rep.stable || rep.at_q.size() != 2) fail_with(o, std::string(label) + ": unstable");
    if (rep.classical2 != 120 || rep.classical3 != 560) fail_with(o, "classical baseline");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s generic %zu/%zu q=1 %zu/%zu classical %zu/%zu [%s]", label, rep.at_q[0].dim2,
                  rep.at_q[0].dim3, rep.at_one.dim2, rep.at_one.dim3, rep.classical2, rep.classical3, rep.verdict.c_str());
    o.detail += std::string(o.detail.empty() ? "" : "; ") + buf;
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  auto sp4 = invariant_count(group_from_tag("sp4"));
  auto so5 = invariant_count(group_from_tag("so5"));
  o.detail = "sp4 " + std::to_string(sp4.count) + " (so5 " + std::to_string(so5.count) + ")";
  if (!sp4.primes_agree || !so5.primes_agree) fail_with(o, "prime ranks disagree");
  if (sp4.count != 20) fail_with(o, "count is not 20 for V = Mat(4)");
  // recorded as unattainable: N = 4 is degenerate, generic groups give 20
  o.known_deviation = sp4.primes_agree && so5.primes_agree && so5.count == 20;
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
  bool blocking = true;
};

}  // namespace

int main(int argc, char** argv) {
  std::FILE* copy = argc > 1 ? std::fopen(argv[1], "w") : nullptr;
  auto line = [&](const std::string& text) {
    std::fputs(text.c_str(), stdout);
    std::fflush(stdout);
    if (copy) std::fputs(text.c_str(), copy);
  };
  const std::vector<Criterion> criteria{
      {1, "structural identities", 10, structural},
      {2, "mu polynomials of the trace bracket", 120, k4},
      {3, "nilpotent mu families", 120, k5},
      {4, "appendix presets nil and dd (symbolic)", 600, presets_symbolic},
      {4, "appendix presets nil and dd (randomized)", 60, presets_randomized},
      {5, "presets with generic parameters fail Jacobi", 300, headline},
      {6, "triangular / quasitriangular dichotomy", 120, dichotomy},
      {7, "quantum identity suite", 120, quantum},
      {8, "relation span equivalences sp4", 60, [] { return spans("sp4"); }},
      {8, "relation span equivalences so5", 600, [] { return spans("so5"); }},
      {9, "semiclassical suite", 600, semiclassical},
      {10, "PBW probe table", 1800, pbw},
      {11, "invariant tensor count (stretch)", 3600, invariants, false},
  };
  int blocking_failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail_with(o, std::string("exception: ") + e.what());
      o.known_deviation = false;
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      fail_with(o, "over time budget");
      o.known_deviation = false;
    }
    const char* note = o.pass ? "" : o.known_deviation ? " [known deviation, see notes]" : c.blocking ? "" : " [non-blocking]";
    char head[200];
    std::snprintf(head, sizeof head, "criterion %2d %s %s (%.1fs / %.0fs)", c.id, o.pass ? "PASS" : "FAIL", c.title, s,
                  c.budget_s);
    line(head + std::string(note) + (o.detail.empty() ? "" : ": ") + o.detail + "\n");
    if (!o.pass && !o.known_deviation && c.blocking) ++blocking_failures;
  }
  line(std::string(blocking_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK") + ": " + std::to_string(blocking_failures) +
       " unexpected failure(s)\n");
  if (copy) std::fclose(copy);
  return blocking_failures ? 1 : 0;
}
