#include <gtest/gtest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

#include "bicov/parallel.hpp"
#include "bicov/relations.hpp"
#include "bicov/semiclassical.hpp"

using namespace bicov;

namespace {

const std::vector<Rational>& q_samples() {
  static const std::vector<Rational> qs{Rational(4), Rational(9, 4)};
  return qs;
}

}  // namespace

TEST(RMatrix, ValidationSuite) {
  for (const char* tag : {"sp4", "so5", "sp6", "so7"}) {
    auto rm = build_rmatrix(group_from_tag(tag));
    ASSERT_FALSE(rm.validation.empty());
    for (const auto& c : rm.validation) EXPECT_TRUE(c.pass) << tag << ": " << c.name;
  }
}

TEST(RMatrix, ConstantsAgainstClosedForms) {
  auto so5 = build_rmatrix(group_from_tag("so5"));
  // nu = q^{1-N}; mu = 1 + [N-1]_q = 1 + (q^4 - q^-4)/(q - q^-1)
  EXPECT_EQ(so5.nu.evaluate_q(2), Rational(1, 16));
  EXPECT_EQ(so5.mu.evaluate_q(2), Rational(93, 8));
  EXPECT_EQ(so5.lambda.evaluate_q(2), Rational(3, 2));
  auto sp4 = build_rmatrix(group_from_tag("sp4"));
  EXPECT_EQ(sp4.nu.evaluate_q(2), Rational(-1, 32));
  // mu = 1 - [5]_q at q = 1 is -4
  EXPECT_EQ(sp4.mu.evaluate_q(1), Rational(-4));
}

TEST(RMatrix, ClassicalLimit) {
  for (const char* tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto rm = build_rmatrix(g);
    EXPECT_EQ(evaluate_at(rm.rhat, 1), flip<Rational>(g.n));
    EXPECT_EQ(evaluate_at(rm.k, 1), k0_tensor(g));
  }
}

TEST(RMatrix, ProjectorRanks) {
  for (const char* tag : {"sp4", "so5", "sp6", "so7"}) {
    auto g = group_from_tag(tag);
    auto r = projector_ranks(build_rmatrix(g));
    auto e = expected_ranks(g);
    EXPECT_EQ(r.plus, e.plus) << tag;
    EXPECT_EQ(r.minus, e.minus) << tag;
    EXPECT_EQ(r.zero, 1) << tag;
  }
  auto sp4 = projector_ranks(build_rmatrix(group_from_tag("sp4")));
  EXPECT_EQ(sp4.plus, 10);
  EXPECT_EQ(sp4.minus, 5);
  auto so5 = projector_ranks(build_rmatrix(group_from_tag("so5")));
  EXPECT_EQ(so5.plus, 14);
  EXPECT_EQ(so5.minus, 10);
}

TEST(RMatrix, RejectsUnknownGroups) {
  EXPECT_THROW(group_from_tag("sp5"), std::invalid_argument);
  EXPECT_THROW(group_from_tag("su3"), std::invalid_argument);
}

TEST(Relations, RowCountsAndProportionality) {
  auto rm = build_rmatrix(group_from_tag("sp4"));
  EXPECT_EQ(relations_unique(rm).rows.size(), 256u);
  EXPECT_EQ(relations_watamura(rm).rows.size(), 256u);
  EXPECT_TRUE(proportional(relations_weighted_sum(rm), relations_unique(rm)));
  EXPECT_FALSE(proportional(relations_watamura(rm), relations_unique(rm)));
}

TEST(Relations, SpanEquivalences) {
  for (const char* tag : {"sp4", "so5"}) {
    auto rm = build_rmatrix(group_from_tag(tag));
    auto w19 = relations_woronowicz(rm);
    auto a = span_equal(rm, w19, relations_unique(rm), q_samples());
    EXPECT_TRUE(a.equal) << tag;
    EXPECT_TRUE(a.stable) << tag;
    EXPECT_EQ(a.samples.size(), 4u);
    auto b = span_equal(rm, merge(w19, relations_rel1(rm), "w19c+rel1"), relations_watamura(rm), q_samples());
    EXPECT_TRUE(b.equal) << tag;
    // the five-term relation alone is strictly weaker than the three-term one
    auto c = span_equal(rm, relations_unique(rm), relations_watamura(rm), q_samples());
    EXPECT_FALSE(c.equal) << tag;
  }
}

TEST(Relations, SampleChecks) {
  auto rm = build_rmatrix(group_from_tag("sp4"));
  EXPECT_THROW(check_sample(rm, 0), std::invalid_argument);
  EXPECT_NO_THROW(check_sample(rm, 3));
  auto so5 = build_rmatrix(group_from_tag("so5"));
  EXPECT_THROW(span_equal(so5, relations_unique(so5), relations_unique(so5), {Rational(4), Rational(3)}), std::domain_error);
}

TEST(Relations, ExportFormat) {
  auto rm = build_rmatrix(group_from_tag("sp4"));
  auto text = export_relations(relations_watamura(rm));
  std::istringstream in(text);
  std::string line;
  const std::regex entry(R"(\(\(\d+,\d+\),\(\d+,\d+\)\) -> .+)");
  int headers = 0, entries = 0;
  while (std::getline(in, line)) {
    if (line.rfind("# relation ", 0) == 0) {
      ++headers;
      continue;
    }
    EXPECT_TRUE(std::regex_match(line, entry)) << line;
    ++entries;
  }
  EXPECT_EQ(headers, 256);
  EXPECT_GT(entries, 256);
}

TEST(Relations, PbwDimensionsAgainstClassicalCount) {
  auto g = group_from_tag("sp4");
  auto rm = build_rmatrix(g);
  auto sd = semiclassical_expand(rm);
  for (auto s : {relations_unique(rm), relations_watamura(rm)}) {
    auto rep = pbw_probe(rm, s, 3, q_samples());
    EXPECT_TRUE(rep.primes_agree) << s.name;
    EXPECT_TRUE(rep.stable) << s.name;
    EXPECT_EQ(rep.classical2, 120u);
    EXPECT_EQ(rep.classical3, 560u);
    // at q = 1 the degree-2 relations are the order-0 symmetric rows plus the classical constraints
    auto e = extract_order_h_bracket(s, sd);
    EXPECT_EQ(rep.at_one.dim2, rep.free2 - e.rank - e.order0_constraints) << s.name;
    EXPECT_TRUE(rep.matches_q_one) << s.name;
    EXPECT_FALSE(rep.matches_classical) << s.name;
    EXPECT_NE(rep.verdict.find("not PBW"), std::string::npos);
    EXPECT_EQ(rep.at_q.front(), rep.at_q.back());
  }
}

TEST(Parallel, ThreadCountAndDeterminism) {
  ::setenv("BICOV_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3);
  auto a = parallel_map<long>(100, [](std::size_t i) { return static_cast<long>(i * i); });
  ::setenv("BICOV_THREADS", "1", 1);
  auto b = parallel_map<long>(100, [](std::size_t i) { return static_cast<long>(i * i); });
  EXPECT_EQ(a, b);
  ::setenv("BICOV_THREADS", "zero", 1);
  EXPECT_GE(thread_count(), 1);
  ::unsetenv("BICOV_THREADS");
}
