#include <gtest/gtest.h>

#include "bicov/presets.hpp"
#include "bicov/random.hpp"
#include "bicov/structure.hpp"

using namespace bicov;

namespace {

using GP = GrassPoly<Rational>;

GP random_poly(Rng& rng, int v, int degree, int terms) {
  std::uniform_int_distribution<int> pick(0, v - 1);
  GP acc;
  for (int t = 0; t < terms; ++t) {
    GP m(random_rational(rng));
    for (int d = 0; d < degree; ++d) m = m * GP::generator(pick(rng));
    acc += m;
  }
  return acc;
}

BracketParams<Rational> random_params(Rng& rng, double density) {
  std::bernoulli_distribution keep(density);
  BracketParams<Rational> p;
  for (int k = 0; k < kParamSlots; ++k)
    if (k != kSlotC5 && keep(rng)) p.slot(k) = random_rational(rng);
  return p;
}

}  // namespace

TEST(Grassmann, SignConventions) {
  auto x = GP::generator(3), y = GP::generator(1);
  EXPECT_EQ(x * y, -(y * x));
  EXPECT_TRUE((x * x).zero());
  EXPECT_EQ((y * x).terms().front().second, Rational(1));
  EXPECT_EQ((x * y).terms().front().second, Rational(-1));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, 9, 1, 3), b = random_poly(rng, 9, 2, 3), c = random_poly(rng, 9, 1, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);  // even commutes
    EXPECT_EQ(a * c, -(c * a));  // odd anticommute
  }
}

TEST(Biderivation, OddDerivationAndSymmetry) {
  auto g = group_from_tag("sp4");
  Rng rng(11);
  auto b = build_bracket(make_bracket_basis(g), random_params(rng, 1.0), standard_r(g).r);
  EXPECT_TRUE(b.graded_symmetric());
  for (int i = 0; i < 40; ++i) {
    auto x = random_poly(rng, 16, 1, 2);
    const int du = 1 + i % 2;
    auto u = random_poly(rng, 16, du, 2), w = random_poly(rng, 16, 1, 2);
    GP expect = b(x, u) * w + (du % 2 ? GP(Rational(-1)) : GP(Rational(1))) * u * b(x, w);
    EXPECT_EQ(b(x, u * w), expect);
  }
}

TEST(Structure, IdentitiesHold) {
  for (const char* tag : {"sp4", "so5"})
    for (const auto& c : structural_identities(group_from_tag(tag))) EXPECT_TRUE(c.pass) << tag << ": " << c.name;
}

TEST(Bracket, TraceShapeReproducesK4Symbolically) {
  for (const char* tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto b = build_bracket(make_bracket_basis(g), symbolic_params(), standard_r(g).r);
    auto mu = mu_extract(b, g);
    EXPECT_TRUE(mu.shape_ok);
    auto expected = k4_polynomials(g);
    for (int i = 0; i < 6; ++i) EXPECT_EQ(mu.mu[i], expected[i]) << tag << " mu" << i + 1;
  }
}

TEST(Bracket, MuExtractSingleParameters) {
  auto g = group_from_tag("so5");
  auto basis = make_bracket_basis(g);
  BracketParams<Rational> p;
  p.a[1] = 1;
  auto mu = mu_extract(build_bracket(basis, p, SpaceTensor<Rational>(g.n, {1, 2})), g).mu;
  EXPECT_EQ(mu[0], Rational(5));
  for (int i = 1; i < 6; ++i) EXPECT_EQ(mu[i], Rational(0));
  BracketParams<Rational> q;
  q.b[3] = 1;
  mu = mu_extract(build_bracket(basis, q, SpaceTensor<Rational>(g.n, {1, 2})), g).mu;
  EXPECT_EQ(mu[2], Rational(1));
  EXPECT_EQ(mu[3], Rational(-1));
}

TEST(Bracket, NilpotentFamiliesAndRandomTuples) {
  const MPoly m = parse_mpoly("mu"), n = parse_mpoly("nu"), z(0);
  const std::array<std::array<MPoly, 6>, 4> families{{
      {m, n, n, n, z, z},
      {m, m, -m, -m, z, z},
      {z, z, z, z, m, -m},
      {z, z, z, z, z, z},
  }};
  for (const char* tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    for (const auto& f : families) EXPECT_TRUE(check_nilpotency_images(images_from_mu(g, f)).vanishes()) << tag;
    Rng rng(2024);
    int failed = 0;
    for (int t = 0; t < 1000; ++t) {
      std::array<Rational, 6> mu;
      for (auto& x : mu) x = random_rational(rng);
      ASSERT_EQ(classify_mu(mu), TraceShape::none);
      failed += !check_nilpotency_images(images_from_mu(g, mu)).vanishes();
    }
    EXPECT_EQ(failed, 1000) << tag;
  }
}

TEST(Bracket, TriangularQuasitriangularDichotomy) {
  for (const char* tag : {"sp4", "so5"}) {
    auto g = group_from_tag(tag);
    auto basis = make_bracket_basis(g);
    BracketParams<Rational> zero;
    EXPECT_TRUE(check_jacobi(build_bracket(basis, zero, abelian_r(g).r)).vanishes()) << tag;
    EXPECT_FALSE(check_jacobi(build_bracket(basis, zero, standard_r(g).r), true).vanishes()) << tag;
    EXPECT_TRUE(jai_identity(g, standard_r(g).r).holds) << tag;
    EXPECT_TRUE(jai_identity(g, abelian_r(g).r).holds) << tag;
  }
}

TEST(Bracket, JacobiImpliesNilAndLeibniz) {
  auto g = group_from_tag("sp4");
  auto basis = make_bracket_basis(g);
  Rng rng(77);
  int poisson = 0;
  for (int t = 0; t < 200; ++t) {
    // every fourth draw is a scaled pure r-term with abelian r, which is Poisson
    auto r = t % 2 ? standard_r(g).r : abelian_r(g).r;
    BracketParams<Rational> p = t % 4 == 0 ? BracketParams<Rational>() : random_params(rng, 0.2);
    auto b = build_bracket(basis, p, r * random_rational(rng));
    if (!check_jacobi(b, true).vanishes()) continue;
    ++poisson;
    EXPECT_TRUE(check_nilpotency(b).vanishes());
    EXPECT_TRUE(check_leibniz(b).vanishes());
  }
  EXPECT_GE(poisson, 50);
}

TEST(Bracket, ClosureVerdictMatchesConstants) {
  auto g = group_from_tag("sp4");
  auto basis = make_bracket_basis(g);
  OmegaMinusAlgebra alg(g);
  Rng rng(99);
  int closed = 0;
  for (int t = 0; t < 500; ++t) {
    auto p = random_params(rng, 0.5);
    if (t % 2 == 0) {  // force alpha- = beta- = 0
      p.b[2] = p.b[1] + Rational(g.eps) * (p.c[2] - p.c[1]);
      p.b[7] = -p.b[6] + Rational(g.eps) * (p.c[6] + p.c[7]);
    }
    auto d = closure_analysis(basis, p, standard_r(g).r, alg);
    const bool expected = is_zero(d.alpha_minus) && is_zero(d.beta_minus);
    EXPECT_EQ(d.closed, expected);
    closed += d.closed;
  }
  EXPECT_GE(closed, 250);
}

TEST(Bracket, ClosureExamples) {
  auto g = group_from_tag("so5");
  auto basis = make_bracket_basis(g);
  OmegaMinusAlgebra alg(g);
  BracketParams<Rational> p;
  p.b[1] = 1;
  auto d = closure_analysis(basis, p, standard_r(g).r, alg);
  EXPECT_FALSE(d.closed);
  EXPECT_EQ(d.alpha_minus, Rational(1));
  EXPECT_TRUE(closure_analysis(basis, BracketParams<Rational>(), standard_r(g).r, alg).closed);
}

TEST(Bracket, DifferentialSquaresToZeroForA1i) {
  auto g = group_from_tag("sp4");
  auto basis = make_bracket_basis(g);
  auto preset = appendix_preset(basis, "A1i");
  auto b = build_bracket(basis, specialize_preset(preset, 3), standard_r(g).r);
  const Rational k(1);
  EXPECT_TRUE(differential_d(b, GP(Rational(1)), k).zero());
  const int v = g.n * g.n;
  bool nonzero_d = false;
  for (int x = 0; x < v; ++x) {
    auto dx = differential_d(b, GP::generator(x), k);
    nonzero_d |= !dx.zero();
    EXPECT_TRUE(differential_d(b, dx, k).zero());
    for (int y = x + 1; y < v; y += 3) {
      auto u = GP::generator(x) * GP::generator(y);
      EXPECT_TRUE(differential_d(b, differential_d(b, u, k), k).zero());
    }
  }
  EXPECT_TRUE(nonzero_d);
}

TEST(Bracket, C5IsRejected) {
  auto g = group_from_tag("so5");
  BracketParams<Rational> p;
  p.c[5] = 1;
  EXPECT_THROW(build_bracket(make_bracket_basis(g), p, standard_r(g).r), std::invalid_argument);
}
