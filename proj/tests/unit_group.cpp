#include <gtest/gtest.h>

#include "bicov/group.hpp"

using namespace bicov;

TEST(Group, Dimensions) {
  EXPECT_EQ(build_group(Family::Sp, 4).lie_basis.size(), 10u);
  EXPECT_EQ(build_group(Family::SO, 5).lie_basis.size(), 10u);
  EXPECT_EQ(build_group(Family::SO, 7).lie_basis.size(), 21u);
  EXPECT_EQ(build_group(Family::Sp, 6).lie_basis.size(), 21u);
  EXPECT_THROW(build_group(Family::Sp, 5), std::invalid_argument);
  EXPECT_THROW(build_group(Family::SO, 3), std::invalid_argument);
  EXPECT_THROW(group_from_tag("su3"), std::invalid_argument);
}

TEST(Group, MetricConventions) {
  auto sp = group_from_tag("sp4");
  EXPECT_EQ(sp.eps_i, (std::vector<int>{1, 1, -1, -1}));
  EXPECT_EQ(sp.metric * sp.metric, identity_on<Rational>(4, {1}) * Rational(-1));
  EXPECT_EQ(transpose_in(sp.metric, 1), -sp.metric);
  auto so = group_from_tag("so5");
  EXPECT_EQ(so.metric * so.metric, identity_on<Rational>(5, {1}));
  EXPECT_EQ(so.metric.at({{0, 4}}), Rational(1));
}

TEST(Group, Membership) {
  auto so = group_from_tag("so5");
  Matrix x(5, {1});
  x.add({{0, 1}}, 1);
  x.add({{3, 4}}, -1);  // e_12 - e_{2'1'}
  EXPECT_TRUE(in_lie_algebra(so, x));
  EXPECT_FALSE(in_lie_algebra(so, unit_matrix<Rational>(5, 1, 0, 0)));
}

TEST(Group, InvariantStructures) {
  for (auto tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    EXPECT_TRUE(ad_invariance_check(flip<Rational>(g.n), g));
    EXPECT_TRUE(ad_invariance_check(k0_tensor(g), g));
    EXPECT_TRUE(ad_invariance_check(identity_on<Rational>(g.n, {1, 2}), g));
  }
  auto so = group_from_tag("so5");
  auto e11 = unit_matrix<Rational>(5, 1, 0, 0) * relabel(unit_matrix<Rational>(5, 1, 0, 0), {{1, 2}});
  EXPECT_FALSE(ad_invariance_check(e11, so));
}

TEST(Group, TildeOfStructures) {
  for (auto tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto eps = Rational(g.eps);
    EXPECT_EQ(tilde_space(g, flip<Rational>(g.n), 1), k0_tensor(g) * eps);
    EXPECT_EQ(tilde_space(g, k0_tensor(g), 1), flip<Rational>(g.n) * eps);
    EXPECT_EQ(tilde_space(g, identity_on<Rational>(g.n, {1, 2}), 1), identity_on<Rational>(g.n, {1, 2}));
  }
}

TEST(Group, StandardR) {
  for (auto tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto r = standard_r(g).r;
    EXPECT_TRUE(is_skew(r));
    EXPECT_TRUE(slots_in_lie_algebra(g, r));
    auto c = cybe_defect(r);
    EXPECT_FALSE(c.zero());
    EXPECT_TRUE(ad_invariance_check(c, g)) << tag;
  }
}

TEST(Group, AbelianR) {
  auto g = group_from_tag("sp4");
  Matrix x(4, {1}), y(4, {1});
  x.add({{0, 0}}, 1);
  x.add({{3, 3}}, -1);
  y.add({{1, 1}}, 1);
  y.add({{2, 2}}, -1);
  auto r = abelian_r(g, x, y).r;
  EXPECT_EQ(r.size(), 8u);
  EXPECT_TRUE(is_skew(r));
  EXPECT_TRUE(cybe_defect(r).zero());
  EXPECT_THROW(abelian_r(g, x, x * Rational(2)), std::invalid_argument);
  EXPECT_TRUE(cybe_defect(SpaceTensor<Rational>(4, {1, 2})).zero());
}
