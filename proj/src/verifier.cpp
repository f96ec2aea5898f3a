#include "bicov/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "bicov/invariants.hpp"
#include "bicov/nogo.hpp"
#include "bicov/presets.hpp"
#include "bicov/random.hpp"
#include "bicov/structure.hpp"

namespace bicov {

using nlohmann::json;

std::string to_string(Mode m) { return m == Mode::symbolic ? "symbolic" : "randomized"; }

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::pass: return "pass";
    case Expectation::fail: return "fail";
    case Expectation::finding: return "finding";
  }
  return "";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::fail_as_expected: return "fail-as-expected";
    case Status::unexpected_pass: return "unexpected-pass";
    case Status::finding: return "finding";
  }
  return "";
}

Mode parse_mode(const std::string& s) {
  if (s == "symbolic") return Mode::symbolic;
  if (s == "randomized") return Mode::randomized;
  throw std::invalid_argument("unknown mode: " + s);
}

Expectation parse_expectation(const std::string& s) {
  for (auto e : {Expectation::pass, Expectation::fail, Expectation::finding})
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown expectation: " + s);
}

Status parse_status(const std::string& s) {
  for (auto x : {Status::pass, Status::fail, Status::fail_as_expected, Status::unexpected_pass, Status::finding})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown status: " + s);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classical", "differential", "jacobi", "quantum", "semiclassical", "pbw"};
  return names;
}

void validate(const RunConfig& c) {
  if (c.suites.empty()) throw std::invalid_argument("at least one suite is required");
  for (const auto& s : c.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite: " + s);
  if (c.mode == Mode::randomized && c.seeds.empty()) throw std::invalid_argument("randomized mode needs at least one seed");
  if (c.degree != 2 && c.degree != 3) throw std::invalid_argument("degree must be 2 or 3");
  if (c.format != "json" && c.format != "markdown") throw std::invalid_argument("unknown format: " + c.format);
  if (c.q_samples.empty()) throw std::invalid_argument("at least one q sample is required");
  for (const auto& [name, v] : c.params)
    if (!var_index(name)) throw std::invalid_argument("unknown parameter: " + name);
  if (c.preset) {
    const auto& tags = preset_tags();
    if (std::find(tags.begin(), tags.end(), *c.preset) == tags.end()) throw std::invalid_argument("unknown preset: " + *c.preset);
  }
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void set_param(RunConfig& c, const std::string& key, const std::string& value) {
  if (!var_index(key)) throw std::invalid_argument("unknown parameter: " + key);
  if (value == "free")
    c.params[key] = std::nullopt;
  else
    c.params[key] = parse_rational(value);
}

}  // namespace

void apply_params_text(RunConfig& c, const std::string& text) {
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + item);
    set_param(c, trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
}

void apply_config_text(RunConfig& c, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument("expected key = value");
      const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) throw std::invalid_argument("expected key = value");
      if (key == "group") {
        c.group = value;
      } else if (key == "suites") {
        c.suites = split(value, ',');
      } else if (key == "mode") {
        c.mode = parse_mode(value);
      } else if (key == "seed" || key == "seeds") {
        c.seeds.clear();
        for (const auto& s : split(value, ',')) c.seeds.push_back(std::stoull(s));
      } else if (key == "q") {
        c.q_samples.clear();
        for (const auto& s : split(value, ',')) c.q_samples.push_back(parse_rational(s));
      } else if (key == "degree") {
        c.degree = std::stoi(value);
      } else if (key == "preset") {
        c.preset = value;
      } else if (key == "format") {
        c.format = value;
      } else {
        set_param(c, key, value);
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
}

Status judge(Expectation e, bool holds) {
  switch (e) {
    case Expectation::pass: return holds ? Status::pass : Status::fail;
    case Expectation::fail: return holds ? Status::unexpected_pass : Status::fail_as_expected;
    case Expectation::finding: return Status::finding;
  }
  return Status::fail;
}

void VerificationReport::sort() {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

bool VerificationReport::success() const {
  return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) {
    return r.status == Status::fail || r.status == Status::unexpected_pass;
  });
}

namespace {

std::string slug(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    else if (!out.empty() && out.back() != '-')
      out += '-';
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

std::string summary(const ResidualReport& r) {
  std::string s = "checked " + std::to_string(r.checked) + ", nonzero " + std::to_string(r.nonzero);
  if (!r.sample.empty()) s += "; " + (r.sample.size() > 160 ? r.sample.substr(0, 160) + "..." : r.sample);
  return s;
}

json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

class Suite {
 public:
  Suite(const RunConfig& c, std::string name, std::vector<CheckRecord>& out) : config_(c), name_(std::move(name)), out_(out) {}

  const RunConfig& config() const { return config_; }

  CheckRecord& add(const std::string& id, const std::string& tag, Expectation e, bool holds, std::string residual = {},
                   json details = json::object()) {
    CheckRecord r;
    r.id = name_ + "." + id;
    r.tag = tag;
    r.suite = name_;
    r.expected = e;
    r.status = judge(e, holds);
    r.residual = std::move(residual);
    r.details = std::move(details);
    r.details["provenance"] = provenance_;
    r.timing_ms = elapsed_;
    out_.push_back(std::move(r));
    return out_.back();
  }

  /// Runs f and stamps the following records with its wall time and provenance.
  void timed(json provenance, const std::function<void()>& f) {
    provenance_ = std::move(provenance);
    auto t0 = std::chrono::steady_clock::now();
    elapsed_ = 0;
    const std::size_t first = out_.size();
    f();
    elapsed_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t i = first; i < out_.size(); ++i) out_[i].timing_ms = elapsed_;
  }

  json exact() const { return {{"mode", "exact"}}; }
  json symbolic() const { return {{"mode", "symbolic"}}; }
  json seeded(const std::vector<std::uint64_t>& seeds) const { return {{"mode", "randomized"}, {"seeds", seeds}}; }
  json sampled(const std::vector<Rational>& qs) const { return {{"mode", "exact"}, {"q_samples", rationals(qs)}}; }

  const std::vector<std::uint64_t>& seeds() const {
    static const std::vector<std::uint64_t> fallback{1};
    return config_.seeds.empty() ? fallback : config_.seeds;
  }

 private:
  const RunConfig& config_;
  std::string name_;
  std::vector<CheckRecord>& out_;
  json provenance_ = json::object();
  double elapsed_ = 0;
};

// ---------------------------------------------------------------------------
// parameter handling

std::map<int, MPoly> fixed_values(const RunConfig& c) {
  std::map<int, MPoly> out;
  for (const auto& [name, v] : c.params)
    if (v) out.emplace(*var_index(name), MPoly(*v));
  return out;
}

bool has_bracket_params(const RunConfig& c) {
  return std::any_of(c.params.begin(), c.params.end(), [](const auto& kv) { return kv.first != "kappa"; });
}

Rational kappa(const RunConfig& c) {
  auto it = c.params.find("kappa");
  if (it == c.params.end() || !it->second) return 1;
  if (is_zero(*it->second)) throw std::invalid_argument("kappa must be nonzero");
  return *it->second;
}

BracketParams<MPoly> substitute(const BracketParams<MPoly>& p, const std::map<int, MPoly>& values) {
  BracketParams<MPoly> out;
  for (int k = 0; k < kParamSlots; ++k) out.slot(k) = p.slot(k).substitute(values);
  return out;
}

struct NamedParams {
  std::string label;
  BracketParams<MPoly> params;
  Expectation expected;  // pass for presets, finding for user brackets
};

/// Selected preset (with overrides), all presets, or the user-specified family member.
std::vector<NamedParams> selected_brackets(const RunConfig& c, const BracketBasis& basis) {
  std::vector<NamedParams> out;
  const auto fixed = fixed_values(c);
  if (!c.preset && has_bracket_params(c)) {
    BracketParams<MPoly> p;
    for (const auto& [name, v] : c.params) {
      auto slot = slot_of(name);
      if (!slot) continue;
      p.slot(*slot) = v ? MPoly(*v) : MPoly::variable(name);
    }
    out.push_back({"custom", p, Expectation::finding});
    return out;
  }
  std::vector<std::string> tags = c.preset ? std::vector<std::string>{*c.preset} : preset_tags();
  for (const auto& t : tags) out.push_back({t, substitute(appendix_preset(basis, t).params, fixed), Expectation::pass});
  return out;
}

BracketParams<Rational> specialize(const BracketParams<MPoly>& p, std::uint64_t seed) {
  return evaluate_params(p, random_point(seed));
}

// ---------------------------------------------------------------------------
// suites

std::string structure_tag(const std::string& name) {
  if (name.rfind("K0", 0) == 0) return "y11a";
  if (name.rfind("c5", 0) == 0) return "pb";
  if (name.rfind("(tr", 0) == 0) return "nil";
  return "til";
}

void classical_suite(Suite& s, const GroupData& g) {
  s.timed(s.symbolic(), [&] {
    for (const auto& c : structural_identities(g))
      s.add("structure." + slug(c.name), structure_tag(c.name), Expectation::pass, c.pass);
  });
  const auto basis = make_bracket_basis(g);
  s.timed(s.symbolic(), [&] {
    auto b = build_bracket(basis, symbolic_params(), standard_r(g).r);
    auto mu = mu_extract(b, g);
    auto expected = k4_polynomials(g);
    json got = json::object();
    bool equal = mu.shape_ok;
    for (int i = 0; i < 6; ++i) {
      got["mu" + std::to_string(i + 1)] = mu.mu[i].str();
      equal &= mu.mu[i] == expected[i];
    }
    s.add("k4.mu-polynomials", "k4", Expectation::pass, equal, equal ? "" : "mu differs from the closed form",
          {{"mu", got}});
  });
  s.timed(s.symbolic(), [&] {
    const MPoly m = parse_mpoly("mu"), n = parse_mpoly("nu"), z(0);
    const std::array<std::pair<const char*, std::array<MPoly, 6>>, 4> families{{
        {"i", {m, n, n, n, z, z}},
        {"ii", {m, m, -m, -m, z, z}},
        {"iii", {z, z, z, z, m, -m}},
        {"iv", {z, z, z, z, z, z}},
    }};
    for (const auto& [name, mu] : families) {
      auto rep = check_nilpotency_images(images_from_mu(g, mu));
      s.add(std::string("k5.family-") + name + ".nil", "k5", Expectation::pass, rep.vanishes(), summary(rep));
    }
  });
  s.timed(s.seeded(s.seeds()), [&] {
    const std::size_t total = 1000, k = s.seeds().size();
    std::size_t tried = 0, off_family = 0, failed = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Rng rng(s.seeds()[i]);
      for (std::size_t t = 0; t < total / k + (i < total % k); ++t) {
        std::array<Rational, 6> mu;
        for (auto& x : mu) x = random_rational(rng);
        ++tried;
        if (classify_mu(mu) != TraceShape::none) continue;
        ++off_family;
        failed += !check_nilpotency_images(images_from_mu(g, mu)).vanishes();
      }
    }
    s.add("k5.off-family.nil", "k5", Expectation::fail, failed != off_family,
          std::to_string(failed) + " of " + std::to_string(off_family) + " off-family tuples fail",
          {{"tuples", tried}, {"off_family", off_family}, {"failed", failed}});
  });
  for (const auto& tag : preset_tags()) {
    if (s.config().preset && *s.config().preset != tag) continue;
    s.timed(s.symbolic(), [&] {
      auto preset = appendix_preset(basis, tag);
      s.add("preset." + tag + ".expansion", "appendix", Expectation::pass, preset_expansion_matches(basis, preset), "",
            {{"free", preset.free_symbols}});
      auto shape = trace_bracket_shape(basis, preset);
      s.add("preset." + tag + ".shape", "k5", Expectation::pass, shape == preset.expected_shape, "",
            {{"shape", to_string(shape)}, {"expected_shape", to_string(preset.expected_shape)}});
    });
  }
  s.timed(s.exact(), [&] {
    OmegaMinusAlgebra alg(g);
    auto d = closure_analysis(basis, BracketParams<Rational>(), standard_r(g).r, alg);
    s.add("closure.zero-parameters", "ppbb", Expectation::pass, d.closed);
  });
  s.timed(s.exact(), [&] {
    auto ic = invariant_count(g);
    s.add("invariants.count", "y11", Expectation::finding, ic.primes_agree, "count " + std::to_string(ic.count),
          {{"count", ic.count}, {"weight_zero", ic.weight_zero}, {"primes_agree", ic.primes_agree}});
  });
}

template <class S>
void differential_checks(Suite& s, const std::string& prefix, Expectation e, const GeneratorBracket<S>& b, const S& kinv) {
  auto nil = check_nilpotency(b);
  s.add(prefix + ".nil", "nil", e, nil.vanishes(), summary(nil));
  auto dd = check_leibniz(b);
  s.add(prefix + ".dd", "dd", e, dd.vanishes(), summary(dd));
  ResidualReport sq;
  const int v = b.generators();
  for (int x = 0; x < v; ++x) {
    auto dx = differential_d(b, GrassPoly<S>::generator(x), kinv);
    record(sq, differential_d(b, dx, kinv), "d^2 gen " + std::to_string(x));
  }
  s.add(prefix + ".d-squared", "opd", e, sq.vanishes(), summary(sq));
}

void differential_suite(Suite& s, const GroupData& g) {
  const auto basis = make_bracket_basis(g);
  const auto r = standard_r(g).r;
  const Rational kinv = 1 / kappa(s.config());
  for (const auto& np : selected_brackets(s.config(), basis)) {
    if (s.config().mode == Mode::symbolic) {
      s.timed(s.symbolic(), [&] {
        differential_checks(s, np.label, np.expected, build_bracket(basis, np.params, r), MPoly(kinv));
      });
      continue;
    }
    for (auto seed : s.seeds())
      s.timed(s.seeded({seed}), [&] {
        differential_checks(s, np.label + ".seed-" + std::to_string(seed), np.expected,
                            build_bracket(basis, specialize(np.params, seed), r), kinv);
      });
  }
}

void jacobi_suite(Suite& s, const GroupData& g) {
  const auto basis = make_bracket_basis(g);
  const auto std_r = standard_r(g).r, ab_r = abelian_r(g).r;
  s.timed(s.exact(), [&] {
    auto a = check_jacobi(build_bracket(basis, BracketParams<Rational>(), ab_r));
    s.add("dichotomy.triangular", "y5", Expectation::pass, a.vanishes(), summary(a));
    auto q = check_jacobi(build_bracket(basis, BracketParams<Rational>(), std_r), true);
    s.add("dichotomy.quasitriangular", "y5", Expectation::fail, q.vanishes(), summary(q));
    for (const auto& [name, r] : {std::pair{"standard", &std_r}, std::pair{"abelian", &ab_r}}) {
      auto j = jai_identity(g, *r);
      s.add(std::string("jai.") + name, "jai", Expectation::pass, j.holds,
            "entries " + std::to_string(j.entries) + ", mismatches " + std::to_string(j.mismatches));
    }
  });
  // symbolic mode still evaluates at seeded points: a nonzero value proves a nonzero Jacobiator
  for (const auto& np : selected_brackets(s.config(), basis)) {
    const Expectation e = np.expected == Expectation::pass ? Expectation::fail : Expectation::finding;
    for (auto seed : s.seeds())
      s.timed(s.seeded({seed}), [&] {
        auto b = build_bracket(basis, specialize(np.params, seed), std_r);
        auto rep = check_jacobi(b, true);
        s.add(np.label + ".seed-" + std::to_string(seed) + ".jacobi", "y5", e, rep.vanishes(), summary(rep));
      });
  }
}

std::string rmatrix_tag(const std::string& name) {
  if (name == "braid" || name == "cubic") return "w18";
  if (name.rfind("ww", 0) == 0) return "ww";
  if (name.find("K") != std::string::npos) return "w18";
  return "w20";
}

std::string projector_names(std::string name) {
  for (const auto& [from, to] : {std::pair{"P+", "Pplus "}, std::pair{"P-", "Pminus "}, std::pair{"P0", "Pzero "}})
    for (auto p = name.find(from); p != std::string::npos; p = name.find(from)) name.replace(p, 2, to);
  return name;
}

void quantum_suite(Suite& s, const GroupData& g) {
  RMatrixData rm;
  s.timed(s.symbolic(), [&] {
    rm = assemble_rmatrix(g);
    for (const auto& c : validate_rmatrix(rm)) s.add("rmatrix." + slug(projector_names(c.name)), rmatrix_tag(c.name), Expectation::pass, c.pass);
    auto r = projector_ranks(rm);
    auto e = expected_ranks(g);
    s.add("rmatrix.projector-ranks", "w20", Expectation::pass, r.plus == e.plus && r.minus == e.minus && r.zero == 1, "",
          {{"plus", r.plus}, {"minus", r.minus}, {"zero", r.zero}});
    s.add("relations.weighted-sum-proportional", "w22", Expectation::pass,
          proportional(relations_weighted_sum(rm), relations_unique(rm)));
  });
  const auto& qs = s.config().q_samples;
  auto span_details = [](const SpanReport& r) {
    json a = json::array();
    for (const auto& x : r.samples)
      a.push_back({{"q", x.q.get_str()}, {"prime", x.prime}, {"rank_a", x.rank_a}, {"rank_b", x.rank_b}, {"rank_union", x.rank_union}});
    return json{{"samples", a}, {"stable", r.stable}};
  };
  s.timed(s.sampled(qs), [&] {
    auto w19 = relations_woronowicz(rm);
    auto a = span_equal(rm, w19, relations_unique(rm), qs);
    s.add("relations.span-w19c-w22", "w22", Expectation::pass, a.equal && a.stable, "", span_details(a));
    auto b = span_equal(rm, merge(w19, relations_rel1(rm), "w19c+rel1"), relations_watamura(rm), qs);
    s.add("relations.span-w19c-rel1-wat", "wat", Expectation::pass, b.equal && b.stable, "", span_details(b));
    auto c = span_equal(rm, relations_unique(rm), relations_watamura(rm), qs);
    s.add("relations.span-w22-wat", "wat", Expectation::finding, c.equal, c.equal ? "equal" : "different", span_details(c));
  });
}

std::string semiclassical_tag(const std::string& name) {
  if (name.rfind("qe", 0) == 0) return "qe";
  if (name.find("mYBE") != std::string::npos || name == "r skew") return "mybe";
  return "cl";
}

void semiclassical_suite(Suite& s, const GroupData& g) {
  RMatrixData rm;
  SemiclassicalData sd;
  s.timed(s.symbolic(), [&] {
    rm = build_rmatrix(g);
    sd = semiclassical_expand(rm);
    for (const auto& c : semiclassical_checks(rm, sd))
      s.add("expansion." + slug(c.name), semiclassical_tag(c.name), Expectation::pass, c.pass);
    auto qe = qe_identities(sd);
    for (int i = 0; i < 2; ++i)
      s.add("qe.constant-" + std::to_string(i + 1), "qe", Expectation::pass,
            qe[i].computed && *qe[i].computed == qe[i].quoted, "",
            {{"computed", qe[i].computed ? qe[i].computed->get_str() : "none"}, {"quoted", qe[i].quoted.get_str()}});
  });
  s.timed(s.exact(), [&] {
    auto e = extract_order_h_bracket(relations_unique(rm), sd);
    auto cmp = compare_with_genw(e, sd);
    json d{{"rank", e.rank}, {"nullity", e.nullity}, {"order0_constraints", e.order0_constraints}};
    s.add("extraction.w22.genw", "genw", Expectation::pass, e.consistent && cmp.reproduces(), "", d);
    s.add("extraction.w22.nullity-positive", "genw", Expectation::pass, e.nullity > 0, "", d);
  });
  s.timed(s.exact(), [&] {
    auto e = extract_order_h_bracket(relations_watamura(rm), sd);
    const bool holds = e.unique() && e.particular == fgf_bracket(sd);
    std::string why = holds ? "" : !e.consistent ? "first-order system inconsistent modulo the classical relations"
                                                 : e.nullity ? "solution not unique" : "solution differs from fgf";
    s.add("extraction.wat.fgf", "fgf", Expectation::pass, holds, why,
          {{"rank", e.rank}, {"nullity", e.nullity}, {"order0_constraints", e.order0_constraints}, {"consistent", e.consistent}});
  });
  s.timed(s.exact(), [&] {
    auto r = fgf_no_go(sd);
    s.add("fgf.nil", "nil", Expectation::fail, r.nilpotency.vanishes(), summary(r.nilpotency));
    s.add("fgf.jacobi", "y5", Expectation::fail, r.jacobi.vanishes(), summary(r.jacobi));
    s.add("fgf.omega-minus-trace", "fgf", Expectation::pass, r.omega_minus.trace_identity());
    s.add("fgf.omega-minus-dd", "dd", Expectation::fail, r.omega_minus.leibniz_vanishes());
    s.add("fgf.jacobi-mod-gru", "gru", Expectation::pass, r.jacobi_mod_gru.vanishes(), summary(r.jacobi_mod_gru));
  });
  s.timed(s.exact(), [&] {
    auto c = constrained_poisson_check(sd);
    s.add("constrained.symmetric-mod-gru", "Poi", Expectation::pass, c.symmetric_modulo_gru);
    s.add("constrained.jacobi-mod-gru", "Poi", Expectation::pass, c.jacobi_mod_gru.vanishes(), summary(c.jacobi_mod_gru));
    s.add("constrained.jacobi-unreduced", "Poi", Expectation::finding, c.jacobi.vanishes(), summary(c.jacobi));
  });
}

void pbw_suite(Suite& s, const GroupData& g) {
  auto rm = build_rmatrix(g);
  const auto& qs = s.config().q_samples;
  const int degree = s.config().degree;
  for (const auto& [label, set] : {std::pair{std::string("w22"), relations_unique(rm)},
                                    std::pair{std::string("wat"), relations_watamura(rm)}}) {
    s.timed(s.sampled(qs), [&] {
      auto rep = pbw_probe(rm, set, degree, qs);
      json at_q = json::array();
      for (std::size_t i = 0; i < rep.at_q.size(); ++i)
        at_q.push_back({{"q", rep.q_samples[i].get_str()}, {"dim2", rep.at_q[i].dim2}, {"dim3", rep.at_q[i].dim3}});
      json d{{"degree", degree},
             {"at_q", at_q},
             {"at_one", {{"dim2", rep.at_one.dim2}, {"dim3", rep.at_one.dim3}}},
             {"classical", {{"dim2", rep.classical2}, {"dim3", rep.classical3}}},
             {"matches_q_one", rep.matches_q_one},
             {"matches_classical", rep.matches_classical},
             {"verdict", rep.verdict}};
      s.add(label + ".stable", "pbw", Expectation::pass, rep.primes_agree && rep.stable);
      s.add(label + ".dimensions", "pbw", Expectation::finding, true, rep.verdict, d);
    });
  }
}

}  // namespace

VerificationReport run(const RunConfig& config) {
  validate(config);
  const GroupData g = group_from_tag(config.group);
  VerificationReport rep;
  rep.config = config;
  const std::map<std::string, void (*)(Suite&, const GroupData&)> runners{
      {"classical", classical_suite}, {"differential", differential_suite}, {"jacobi", jacobi_suite},
      {"quantum", quantum_suite},     {"semiclassical", semiclassical_suite}, {"pbw", pbw_suite}};
  for (const auto& name : config.suites) {
    Suite s(config, name, rep.records);
    try {
      runners.at(name)(s, g);
    } catch (const std::exception& e) {
      s.add("error", "none", Expectation::pass, false, e.what());
    }
  }
  rep.sort();
  auto dup = std::adjacent_find(rep.records.begin(), rep.records.end(),
                                [](const CheckRecord& a, const CheckRecord& b) { return a.id == b.id; });
  if (dup != rep.records.end()) throw std::logic_error("duplicate check id " + dup->id);
  return rep;
}

// ---------------------------------------------------------------------------
// rendering

json to_json(const VerificationReport& r) {
  const auto& c = r.config;
  json params = json::object();
  for (const auto& [k, v] : c.params) params[k] = v ? v->get_str() : "free";
  json records = json::array();
  std::map<std::string, int> counts;
  for (const auto& x : r.records) {
    json j{{"id", x.id},
           {"tag", x.tag},
           {"suite", x.suite},
           {"expected", to_string(x.expected)},
           {"status", to_string(x.status)},
           {"residual", x.residual},
           {"details", x.details}};
    if (c.timing) j["timing_ms"] = x.timing_ms;
    records.push_back(std::move(j));
    ++counts[to_string(x.status)];
  }
  return json{{"schema", "bicov-report"},
              {"schema_version", kReportSchemaVersion},
              {"config",
               {{"group", c.group},
                {"suites", c.suites},
                {"mode", to_string(c.mode)},
                {"seeds", c.seeds},
                {"q_samples", rationals(c.q_samples)},
                {"degree", c.degree},
                {"preset", c.preset ? json(*c.preset) : json(nullptr)},
                {"params", params},
                {"timing", c.timing}}},
              {"records", records},
              {"summary", {{"total", r.records.size()}, {"counts", counts}, {"exit_code", r.exit_code()}}}};
}

VerificationReport report_from_json(const json& j) {
  if (j.at("schema") != "bicov-report") throw std::invalid_argument("not a bicov report");
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw std::invalid_argument("unsupported schema version");
  VerificationReport r;
  const auto& c = j.at("config");
  r.config.group = c.at("group");
  r.config.suites = c.at("suites").get<std::vector<std::string>>();
  r.config.mode = parse_mode(c.at("mode"));
  r.config.seeds = c.at("seeds").get<std::vector<std::uint64_t>>();
  r.config.q_samples.clear();
  for (const auto& q : c.at("q_samples")) r.config.q_samples.push_back(parse_rational(q.get<std::string>()));
  r.config.degree = c.at("degree");
  if (!c.at("preset").is_null()) r.config.preset = c.at("preset").get<std::string>();
  for (const auto& [k, v] : c.at("params").items()) {
    const auto text = v.get<std::string>();
    r.config.params[k] = text == "free" ? std::nullopt : std::optional<Rational>(parse_rational(text));
  }
  r.config.timing = c.at("timing");
  for (const auto& x : j.at("records")) {
    CheckRecord rec;
    rec.id = x.at("id");
    rec.tag = x.at("tag");
    rec.suite = x.at("suite");
    rec.expected = parse_expectation(x.at("expected"));
    rec.status = parse_status(x.at("status"));
    rec.residual = x.at("residual");
    rec.details = x.at("details");
    if (x.contains("timing_ms")) rec.timing_ms = x.at("timing_ms");
    r.records.push_back(std::move(rec));
  }
  return r;
}

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|')
      out += "\\|";
    else if (ch == '\n')
      out += ' ';
    else
      out += ch;
  }
  return out;
}

std::string render_markdown(const VerificationReport& r) {
  const auto& c = r.config;
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "- group: " << c.group << "\n- suites: ";
  for (std::size_t i = 0; i < c.suites.size(); ++i) os << (i ? ", " : "") << c.suites[i];
  os << "\n- mode: " << to_string(c.mode) << "\n- seeds: ";
  for (std::size_t i = 0; i < c.seeds.size(); ++i) os << (i ? ", " : "") << c.seeds[i];
  os << "\n- q samples: ";
  for (std::size_t i = 0; i < c.q_samples.size(); ++i) os << (i ? ", " : "") << c.q_samples[i].get_str();
  os << "\n\n| tag | check | expected | status | residual |" << (c.timing ? " ms |" : "") << "\n";
  os << "|---|---|---|---|---|" << (c.timing ? "---|" : "") << "\n";
  for (const auto& x : r.records) {
    os << "| (" << cell(x.tag) << ") | " << cell(x.id) << " | " << to_string(x.expected) << " | " << to_string(x.status)
       << " | " << cell(x.residual) << " |";
    if (c.timing) os << " " << static_cast<long>(x.timing_ms) << " |";
    os << "\n";
  }
  os << "\n" << r.records.size() << " checks, exit code " << r.exit_code() << "\n";
  return os.str();
}

}  // namespace

std::string render(const VerificationReport& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "markdown") return render_markdown(r);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace bicov
