#include <gtest/gtest.h>

#include <algorithm>

#include "bicov/verifier.hpp"

using namespace bicov;

namespace {

CheckRecord make_record(std::string id, std::string tag, Expectation e, bool holds) {
  CheckRecord r;
  r.id = std::move(id);
  r.tag = std::move(tag);
  r.suite = r.id.substr(0, r.id.find('.'));
  r.expected = e;
  r.status = judge(e, holds);
  return r;
}

VerificationReport mixed_report() {
  VerificationReport r;
  r.config.suites = {"classical", "jacobi"};
  r.config.params["b1"] = Rational(-1, 2);
  r.config.params["c6"] = std::nullopt;
  r.config.preset = "A2";
  r.records.push_back(make_record("jacobi.A2.seed-1.jacobi", "y5", Expectation::fail, false));
  r.records.push_back(make_record("classical.k4.mu-polynomials", "k4", Expectation::pass, true));
  auto f = make_record("pbw.w22.dimensions", "pbw", Expectation::finding, true);
  f.residual = "a | b";
  f.details = {{"dim2", 130}, {"verdict", "x"}};
  r.records.push_back(f);
  r.sort();
  return r;
}

}  // namespace

TEST(Verifier, JudgeAndExitCode) {
  EXPECT_EQ(judge(Expectation::pass, true), Status::pass);
  EXPECT_EQ(judge(Expectation::pass, false), Status::fail);
  EXPECT_EQ(judge(Expectation::fail, false), Status::fail_as_expected);
  EXPECT_EQ(judge(Expectation::fail, true), Status::unexpected_pass);
  EXPECT_EQ(judge(Expectation::finding, false), Status::finding);
  VerificationReport r;
  r.records.push_back(make_record("a", "k4", Expectation::fail, false));
  EXPECT_EQ(r.exit_code(), 0);
  r.records.push_back(make_record("b", "k4", Expectation::fail, true));
  EXPECT_EQ(r.exit_code(), 1);
  r.records.pop_back();
  r.records.push_back(make_record("c", "k4", Expectation::pass, false));
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Verifier, EmptyReportRendersValidDocuments) {
  VerificationReport r;
  auto j = nlohmann::json::parse(render(r, "json"));
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_TRUE(j.at("records").empty());
  EXPECT_EQ(j.at("summary").at("exit_code"), 0);
  auto md = render(r, "markdown");
  EXPECT_NE(md.find("| tag | check |"), std::string::npos);
  EXPECT_NE(md.find("0 checks"), std::string::npos);
}

TEST(Verifier, SinglePassRecordGivesOneTaggedRow) {
  VerificationReport r;
  r.records.push_back(make_record("classical.k4.mu-polynomials", "k4", Expectation::pass, true));
  auto md = render(r, "markdown");
  EXPECT_NE(md.find("| (k4) | classical.k4.mu-polynomials | pass | pass |"), std::string::npos);
  int rows = 0;
  for (std::size_t p = md.find("\n| ("); p != std::string::npos; p = md.find("\n| (", p + 1)) ++rows;
  EXPECT_EQ(rows, 1);
}

TEST(Verifier, JsonRoundTrip) {
  auto r = mixed_report();
  const auto text = render(r, "json");
  auto back = report_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(render(back, "json"), text);
  EXPECT_EQ(render(back, "markdown"), render(r, "markdown"));
  EXPECT_EQ(back.records.front().id, "classical.k4.mu-polynomials");
  EXPECT_EQ(back.config.params.at("b1"), Rational(-1, 2));
  EXPECT_FALSE(back.config.params.at("c6"));
  EXPECT_NE(render(r, "markdown").find("a \\| b"), std::string::npos);
  EXPECT_THROW(report_from_json(nlohmann::json{{"schema", "other"}}), std::invalid_argument);
}

TEST(Verifier, ConfigText) {
  RunConfig c;
  apply_config_text(c, "# comment\ngroup = so5\nsuites = jacobi, pbw\nseed = 4,5\nq = 4, 9/4\npreset = A1ii\nnu = 3/2  # trailing\nc6 = free\n");
  EXPECT_EQ(c.group, "so5");
  EXPECT_EQ(c.suites, (std::vector<std::string>{"jacobi", "pbw"}));
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(c.q_samples.back(), Rational(9, 4));
  EXPECT_EQ(*c.preset, "A1ii");
  EXPECT_EQ(*c.params.at("nu"), Rational(3, 2));
  EXPECT_FALSE(c.params.at("c6"));
  EXPECT_NO_THROW(validate(c));
  EXPECT_THROW(apply_config_text(c, "nu 3"), std::invalid_argument);
  EXPECT_THROW(apply_config_text(c, "zz = 1"), std::invalid_argument);
  EXPECT_THROW(apply_config_text(c, "a1 = x/2"), std::invalid_argument);
  apply_params_text(c, "a1=2,b3=free");
  EXPECT_EQ(*c.params.at("a1"), Rational(2));
  EXPECT_THROW(apply_params_text(c, "a1"), std::invalid_argument);
}

TEST(Verifier, ValidationRejectsBadConfigs) {
  RunConfig c;
  EXPECT_THROW(validate(c), std::invalid_argument);  // no suites
  c.suites = {"classical"};
  EXPECT_NO_THROW(validate(c));
  c.seeds.clear();
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.mode = Mode::symbolic;
  EXPECT_NO_THROW(validate(c));
  c.suites = {"nope"};
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.suites = {"pbw"};
  c.degree = 4;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.degree = 2;
  c.preset = "A4";
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.preset.reset();
  c.group = "su3";
  EXPECT_THROW(run(c), std::invalid_argument);
}

TEST(Verifier, RunIsDeterministicAndSorted) {
  RunConfig c;
  c.suites = {"jacobi", "quantum"};
  c.preset = "A2";
  c.seeds = {9};
  auto a = run(c), b = run(c);
  EXPECT_EQ(render(a, "json"), render(b, "json"));
  EXPECT_TRUE(std::is_sorted(a.records.begin(), a.records.end(),
                             [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
  EXPECT_EQ(std::adjacent_find(a.records.begin(), a.records.end(),
                               [](const CheckRecord& x, const CheckRecord& y) { return x.id == y.id; }),
            a.records.end());
  EXPECT_EQ(a.exit_code(), 0);
  bool saw = false;
  for (const auto& r : a.records) {
    EXPECT_FALSE(r.tag.empty());
    if (r.id == "jacobi.A2.seed-9.jacobi") {
      saw = true;
      EXPECT_EQ(r.status, Status::fail_as_expected);
    }
  }
  EXPECT_TRUE(saw);
}
