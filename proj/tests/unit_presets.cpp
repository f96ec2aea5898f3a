#include <gtest/gtest.h>

#include "bicov/presets.hpp"

using namespace bicov;

namespace {

struct Case {
  const char* group;
  const char* tag;
};

class PresetTest : public ::testing::TestWithParam<Case> {};

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  return std::string(info.param.group) + "_" + info.param.tag;
}

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (const char* g : {"sp4", "so5"})
    for (const char* t : {"A1i", "A1ii", "A1iii", "A2", "A3"}) out.push_back({g, t});
  return out;
}

}  // namespace

TEST_P(PresetTest, SymbolicNilAndLeibniz) {
  auto g = group_from_tag(GetParam().group);
  auto basis = make_bracket_basis(g);
  auto preset = appendix_preset(basis, GetParam().tag);
  EXPECT_TRUE(preset_expansion_matches(basis, preset));
  EXPECT_FALSE(preset.free_symbols.empty());
  auto b = build_bracket(basis, preset.params, standard_r(g).r);
  EXPECT_TRUE(check_nilpotency(b).vanishes());
  EXPECT_TRUE(check_leibniz(b).vanishes());
  EXPECT_EQ(trace_bracket_shape(basis, preset), preset.expected_shape);
}

TEST_P(PresetTest, GenericParametersBreakJacobi) {
  auto g = group_from_tag(GetParam().group);
  auto basis = make_bracket_basis(g);
  auto preset = appendix_preset(basis, GetParam().tag);
  auto b = build_bracket(basis, specialize_preset(preset, 7), standard_r(g).r);
  EXPECT_TRUE(check_nilpotency(b).vanishes());
  EXPECT_FALSE(check_jacobi(b, true).vanishes());
}

INSTANTIATE_TEST_SUITE_P(Appendix, PresetTest, ::testing::ValuesIn(all_cases()), case_name);

TEST(Presets, TermsAndErrors) {
  auto g = group_from_tag("sp4");
  EXPECT_EQ(preset_tags().size(), 5u);
  EXPECT_EQ(appendix_terms(g, "A3").size(), 6u);
  EXPECT_THROW(appendix_terms(g, "A4"), std::invalid_argument);
}

TEST(Presets, FormIiiConstraint) {
  auto g = group_from_tag("so5");
  auto basis = make_bracket_basis(g);
  auto preset = appendix_preset(basis, "A3");
  auto b = combine(basis, impose_form_iii(g, preset.params), GeneratorBracket<Rational>(g.n));
  auto mu = mu_extract(b, g).mu;
  EXPECT_TRUE(is_zero(mu[4] + mu[5]));
  EXPECT_EQ(mu[4], parse_mpoly("mu"));
}
