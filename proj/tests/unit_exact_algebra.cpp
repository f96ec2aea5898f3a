#include <gtest/gtest.h>

#include "bicov/hjet.hpp"
#include "bicov/laurent.hpp"
#include "bicov/modp.hpp"
#include "bicov/mpoly.hpp"
#include "bicov/random.hpp"

using namespace bicov;

namespace {

MPoly P(const char* s) { return parse_mpoly(s); }

// Brute-force primality test used as an oracle for the field moduli.
bool probably_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
    if (n % p == 0) return n == p;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(MPoly, RingIdentities) {
  EXPECT_EQ(P("(a1+b1)*(a1-b1)"), P("a1^2-b1^2"));
  EXPECT_TRUE((P("a1+3*c2") * MPoly(0)).zero());
  EXPECT_TRUE((P("a1") - P("a1")).zero());
  std::array<Rational, kNumVars> v{};
  v[var_b(1)] = 1;
  v[var_c(1)] = 2;
  EXPECT_EQ(P("2*b1+c1").evaluate(v), Rational(4));
}

TEST(MPoly, ParserRoundTrip) {
  MPoly p = P("1/2*mu - nu^2*kappa + 3*a7*b7*c7 - 4");
  EXPECT_EQ(parse_mpoly(p.str()), p);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_THROW(parse_mpoly("a8"), std::invalid_argument);
  EXPECT_THROW(parse_mpoly("(a1"), std::invalid_argument);
}

TEST(MPoly, RandomizedRingAxioms) {
  Rng rng(11);
  std::vector<std::string> pool{"a1", "b2", "c3", "mu", "nu", "a1*b2", "c3^2", "1/3"};
  auto random_poly = [&] {
    MPoly p;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 4; ++k) p += MPoly(random_rational(rng)) * P(pool[pick(rng)].c_str());
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    MPoly x = random_poly(), y = random_poly(), z = random_poly();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
  }
}

TEST(MPoly, Substitute) {
  MPoly p = P("b3 + 2*b4");
  MPoly s = p.substitute({{var_b(3), P("-(4*a3+2*b4)")}});
  EXPECT_EQ(s, P("-4*a3"));
}

TEST(Laurent, Evaluation) {
  EXPECT_EQ(laurent_eval(q_lambda(), 2), Rational(3, 2));
  EXPECT_EQ(laurent_eval(q_number(3), 1), Rational(3));
  LaurentQ mu = LaurentQ(1) + q_number(4);
  Rational q0 = 2;
  Rational closed = 1 + (pow(q0, 4) - pow(q0, -4)) / (q0 - 1 / q0);
  EXPECT_EQ(laurent_eval(mu, q0), closed);
  EXPECT_EQ(closed, Rational(93, 8));
  EXPECT_THROW(laurent_eval(q_lambda(), 0), std::domain_error);
}

TEST(Laurent, HalfPowersAndSquares) {
  LaurentQ s = LaurentQ::half_q_power(1);
  EXPECT_EQ(s * s, LaurentQ::q_power(1));
  EXPECT_EQ((s * s).simplified().base(), LaurentBase::q);
  EXPECT_EQ(laurent_eval(s, Rational(9, 4)), Rational(3, 2));
  EXPECT_THROW(laurent_eval(s, 2), std::domain_error);
}

TEST(Laurent, EvaluationIsHomomorphism) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentQ a, b;
    for (int e = -3; e <= 3; ++e) {
      a += LaurentQ::monomial(LaurentBase::q, e, random_rational(rng));
      b += LaurentQ::monomial(LaurentBase::s, e, random_rational(rng));
    }
    Rational q0 = Rational(4, 9);
    EXPECT_EQ(laurent_eval(a * b, q0), laurent_eval(a, q0) * laurent_eval(b, q0));
    EXPECT_EQ(laurent_eval(a + b, q0), laurent_eval(a, q0) + laurent_eval(b, q0));
  }
}

TEST(HJet, LaurentJets) {
  EXPECT_EQ(hjet_of_laurent(LaurentQ::q_power(1)), (HJet<>(1, 1)));
  EXPECT_EQ(hjet_of_laurent(q_lambda()), (HJet<>(0, 2)));
  // nu = q^{1-N} for SO(5)
  EXPECT_EQ(hjet_of_laurent(LaurentQ::q_power(-4)), (HJet<>(1, -4)));
  // s-base derivative is halved
  EXPECT_EQ(hjet_of_laurent(LaurentQ::half_q_power(3)), (HJet<>(1, Rational(3, 2))));
}

TEST(HJet, TruncatedAssociativity) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    HJet<> x(random_rational(rng), random_rational(rng));
    HJet<> y(random_rational(rng), random_rational(rng));
    HJet<> z(random_rational(rng), random_rational(rng));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x * y).order0, x.order0 * y.order0);
  }
  EXPECT_TRUE(is_zero(HJet<>::hbar() * HJet<>::hbar()));
}

TEST(ModP, FieldModuliArePrime) {
  EXPECT_TRUE(probably_prime(kPrimeA));
  EXPECT_TRUE(probably_prime(kPrimeB));
  EXPECT_FALSE(probably_prime(kPrimeA + 2));
}

TEST(ModP, ArithmeticAndRationals) {
  FpA x = from_rational<FpA>(Rational(3, 7));
  EXPECT_EQ(x * from_int<FpA>(7), from_int<FpA>(3));
  EXPECT_EQ(x / x, from_int<FpA>(1));
  EXPECT_EQ(-x + x, from_int<FpA>(0));
  EXPECT_EQ(from_int<FpB>(-1) * from_int<FpB>(-1), from_int<FpB>(1));
}

TEST(RandomSpecialize, ZeroAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(random_specialize(MPoly(0), seed), Rational(0));
    EXPECT_EQ(random_specialize(P("a1") - P("a1"), seed), Rational(0));
    EXPECT_TRUE(is_zero(random_specialize_mod<kPrimeA>(MPoly(0), seed)));
  }
  MPoly p = P("a1*b2 - c3^2 + mu");
  EXPECT_EQ(random_specialize(p, 42), random_specialize(p, 42));
  EXPECT_EQ(random_specialize_mod<kPrimeA>(p, 7), random_specialize_mod<kPrimeA>(p, 7));
}

TEST(RandomSpecialize, SchwartzZippelNonvanishing) {
  MPoly p = P("a1^2*b1^2*c1^2 - a2*b2 + 1/5");
  int zeros = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    if (is_zero(random_specialize_mod<kPrimeB>(p, seed))) ++zeros;
  EXPECT_EQ(zeros, 0);
}
