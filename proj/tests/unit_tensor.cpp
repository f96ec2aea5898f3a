#include <gtest/gtest.h>

#include "bicov/group.hpp"
#include "bicov/random.hpp"
#include "bicov/tensor.hpp"

using namespace bicov;

namespace {

using T = SpaceTensor<Rational>;

T random_tensor(int n, std::vector<int> spaces, Rng& rng, int entries) {
  T t(n, spaces);
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int e = 0; e < entries; ++e) {
    std::vector<RowCol> rc;
    for (std::size_t s = 0; s < spaces.size(); ++s) rc.emplace_back(idx(rng), idx(rng));
    t.add(rc, random_rational(rng));
  }
  return t;
}

// K0 contraction oracle written directly with index loops.
Rational k0_square_entry(const GroupData& g, int i1, int i2, int j1, int j2) {
  auto C = [&](int a, int b) { return g.metric.at({{a, b}}); };
  auto Ci = [&](int a, int b) { return g.metric_inv.at({{a, b}}); };
  Rational acc = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) acc += C(i1, i2) * Ci(a, b) * C(a, b) * Ci(j1, j2);
  return acc;
}

}  // namespace

TEST(Tensor, FlipSquaresToIdentity) {
  auto p = flip<Rational>(4);
  EXPECT_EQ(p * p, identity_on<Rational>(4, {1, 2}));
  EXPECT_EQ(identity_on<Rational>(4, {1, 2}) * p, p);
  EXPECT_EQ(swap_spaces(p, 1, 2), p);
}

TEST(Tensor, K0SquareMatchesContractionOracle) {
  for (auto tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto k = k0_tensor(g);
    auto k2 = k * k;
    EXPECT_EQ(k2, k * Rational(g.eps * g.n)) << tag;
    for (int i1 = 0; i1 < g.n; ++i1)
      for (int i2 = 0; i2 < g.n; ++i2)
        EXPECT_EQ(k2.at({{i1, 0}, {i2, g.prime(0)}}), k0_square_entry(g, i1, i2, 0, g.prime(0)));
  }
}

TEST(Tensor, PartialTraces) {
  auto p = flip<Rational>(4);
  EXPECT_EQ(partial_trace(p, {2}), identity_on<Rational>(4, {1}));
  auto full = partial_trace(partial_trace(p, {2}), {1});
  EXPECT_EQ(full.at({}), Rational(4));
  for (auto tag : {"sp4", "so5", "sp6", "so7"}) {
    auto g = group_from_tag(tag);
    EXPECT_EQ(partial_trace(k0_tensor(g), {2}), identity_on<Rational>(g.n, {1}) * Rational(g.eps)) << tag;
  }
  EXPECT_THROW(partial_trace(p, {3}), std::invalid_argument);
}

TEST(Tensor, RelabelAndPermute) {
  Rng rng(3);
  auto r = random_tensor(4, {1, 2}, rng, 10);
  auto skew = r - swap_spaces(r, 1, 2);
  EXPECT_EQ(swap_spaces(skew, 1, 2), -skew);
  EXPECT_THROW(relabel(r, {{1, 2}}), std::invalid_argument);
  auto r13 = relabel(r, {{2, 3}});
  EXPECT_EQ(r13.spaces(), (std::vector<int>{1, 3}));
  // Tr_3 of r13 equals Tr_2 of r12.
  EXPECT_EQ(partial_trace(r13, {3}), partial_trace(r, {2}));
}

TEST(Tensor, ComposeAssociativeAndTraceCyclic) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_tensor(3, {1, 2}, rng, 12);
    auto b = random_tensor(3, {2, 3}, rng, 12);
    auto c = random_tensor(3, {1, 3}, rng, 12);
    EXPECT_EQ((a * b) * c, a * (b * c));
    auto x = random_tensor(3, {1, 2}, rng, 15);
    auto y = random_tensor(3, {1, 2}, rng, 15);
    EXPECT_EQ(partial_trace(x * y, {1, 2}), partial_trace(y * x, {1, 2}));
  }
}

TEST(Tensor, FlipConjugationSwapsSpaces) {
  Rng rng(17);
  auto p = flip<Rational>(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_tensor(4, {1, 2}, rng, 20);
    EXPECT_EQ(p * x * p, swap_spaces(x, 1, 2));
  }
}

TEST(Tensor, DimensionMismatch) {
  EXPECT_THROW(identity_on<Rational>(3, {1}) * identity_on<Rational>(4, {1}), std::invalid_argument);
  EXPECT_THROW(T(4, {2, 1}), std::invalid_argument);
}

TEST(Tensor, DumpFormatIsSortedAndOneBased) {
  T t(2, {1, 2});
  t.add({{1, 0}, {0, 1}}, Rational(-1, 2));
  t.add({{0, 0}, {1, 1}}, Rational(3));
  EXPECT_EQ(t.dump(), "s1:(1,1) s2:(2,2) = 3\ns1:(2,1) s2:(1,2) = -1/2\n");
}
