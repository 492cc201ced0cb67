#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tensorhn/error.hpp"
#include "tensorhn/factor.hpp"
#include "tensorhn/oracles/random.hpp"

using namespace tensorhn;
using fixtures::P;

TEST(Squarefree, Examples) {
  const auto a = squarefree_decompose(P("x^2"));
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0], (PolyFactor{P("x"), 2}));
  EXPECT_EQ(a.constant, Rational(1));

  const Poly f = P("(x-1)*(x-2)^2");
  const auto b = squarefree_decompose(f);
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0], (PolyFactor{P("x-1"), 1}));
  EXPECT_EQ(b.factors[1], (PolyFactor{P("x-2"), 2}));
  EXPECT_EQ(b.expand(), f);

  const auto c = squarefree_decompose(Poly(5));
  EXPECT_TRUE(c.factors.empty());
  EXPECT_EQ(c.constant, Rational(5));

  EXPECT_THROW(squarefree_decompose(Poly()), Error);
}

TEST(FactorRational, Examples) {
  const auto a = factor_rational(P("x^2 - 1"));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].factor, P("x - 1"));
  EXPECT_EQ(a.factors[1].factor, P("x + 1"));

  const auto b = factor_rational(P("x^2 + 1"));
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].factor, P("x^2 + 1"));

  const auto c = factor_rational(P("(x^2+1)*(2*x-3)"));
  EXPECT_EQ(c.constant, Rational(2));
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0], (PolyFactor{P("x - 3/2"), 1}));
  EXPECT_EQ(c.factors[1], (PolyFactor{P("x^2 + 1"), 1}));

  EXPECT_THROW(factor_rational(Poly()), Error);
}

TEST(FactorRational, SplitsRootlessQuartics) {
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational roots.
  const auto a = factor_rational(P("x^4 + 4"));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].factor * a.factors[1].factor, P("x^4 + 4"));
  EXPECT_EQ(factor_rational(P("x^4 + 1")).factors.size(), 1u);
  const auto b = factor_rational(P("(x^2 - 2)^2 * (x^3 - 2) * (x^2 + x + 1)"));
  ASSERT_EQ(b.factors.size(), 3u);
  EXPECT_EQ(b.factors[0], (PolyFactor{P("x^2 - 2"), 2}));
  EXPECT_EQ(b.factors[1], (PolyFactor{P("x^2 + x + 1"), 1}));
  EXPECT_EQ(b.factors[2], (PolyFactor{P("x^3 - 2"), 1}));
}

TEST(FactorRational, RandomProductsReconstruct) {
  random::Rng rng(3);
  for (int k = 0; k < 150; ++k) {
    Poly f(Rational(std::uniform_int_distribution<int>(1, 6)(rng)));
    const int parts = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < parts; ++j) {
      Poly g = random::poly(rng, 3, 5);
      if (g.is_zero()) g = P("x");
      f = f * g;
    }
    const auto fac = factor_rational(f);
    EXPECT_EQ(fac.expand(), f) << f;
    for (const auto& pf : fac.factors) {
      EXPECT_EQ(pf.factor.lead(), Rational(1));
      // Irreducible: a second factorization of each piece is trivial.
      const auto again = factor_rational(pf.factor);
      ASSERT_EQ(again.factors.size(), 1u) << pf.factor;
      EXPECT_EQ(again.factors[0].multiplicity, 1);
    }
  }
}

TEST(RationalRoots, FindsAllAscending) {
  const auto roots = rational_roots(P("(2*x - 1)*(x + 3)*(x^2 + 1)*x"));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], Rational(-3));
  EXPECT_EQ(roots[1], Rational(0));
  EXPECT_EQ(roots[2], Rational(1, 2));
  EXPECT_TRUE(rational_roots(P("x^2 - 2")).empty());
  EXPECT_TRUE(rational_roots(Poly(3)).empty());
}

TEST(MonicDivisors, EnumeratesAll) {
  const auto divisors = monic_divisors(factor_rational(P("3*(x-1)^2*(x+2)")));
  EXPECT_EQ(divisors.size(), 6u);
  for (const auto& d : divisors) EXPECT_TRUE(divides_exactly(P("(x-1)^2*(x+2)"), d)) << d;
}
