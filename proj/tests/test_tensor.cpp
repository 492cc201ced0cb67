#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tensorhn/error.hpp"
#include "tensorhn/oracles/oracles.hpp"
#include "tensorhn/oracles/random.hpp"
#include "tensorhn/stability.hpp"
#include "tensorhn/tensor.hpp"

using namespace tensorhn;
using fixtures::dir;
using fixtures::P;
using fixtures::tensor;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorKind::ParseError, "none");
}

}  // namespace

TEST(ValidateTensor, DegreeBounds) {
  EXPECT_NO_THROW(tensor(0, 0, 0, {"1", "0", "0"}));
  const Error e = error_of([] { tensor(0, 0, 0, {"x", "0", "0"}); });
  EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  EXPECT_NE(std::string(e.what()).find("a_2"), std::string::npos);
  const auto t = tensor(0, 0, 2, {"x", "0", "0"});
  EXPECT_EQ(t.coefficient_bound(2), 2);
  EXPECT_EQ(error_of([] { tensor(0, 0, 0, {"0", "0", "0"}); }).kind(), ErrorKind::ZeroTensor);
  EXPECT_EQ(error_of([] { validate_tensor({{0, 0}, 2, 0, {Poly(1)}}); }).kind(), ErrorKind::InvalidParameters);
}

TEST(ValidateTensor, SwapsFactorsWhenNeeded) {
  // O(0) + O(3), F = X0^2 with a_2 of degree <= M - 0 = 0.
  const auto t = tensor(0, 3, 6, {"1", "0", "0"});
  EXPECT_TRUE(t.swapped());
  EXPECT_EQ(t.bundle(), (SplitBundle{3, 0}));
  // X0 of the input is X1 of the stored form.
  EXPECT_EQ(t.form().coeff(0), Poly(1));
  EXPECT_TRUE(t.form().coeff(2).is_zero());
}

TEST(LineSubbundle, SaturatedDegree) {
  const SplitBundle e{3, -1};
  EXPECT_EQ(line_subbundle(e, P("0"), P("x")).degree, -1);
  EXPECT_EQ(line_subbundle(e, P("x^2"), P("0")).degree, 3);
  EXPECT_EQ(line_subbundle(e, P("x^2"), P("x + 1")).degree, -2);
  EXPECT_EQ(line_subbundle(e, P("1"), P("x^3")).degree, -4);
  EXPECT_EQ(line_subbundle(e, P("2*x"), P("4*x")).section, dir("1/2", "1"));
  EXPECT_THROW(line_subbundle(e, P("0"), P("0")), Error);
}

// The section of E(-c) given by (p, q) has p, q within their degree bounds
// and does not vanish at infinity; at c + 1 a bound fails.
TEST(LineSubbundle, SaturationIsTight) {
  random::Rng rng(51);
  for (int k = 0; k < 300; ++k) {
    const int b = std::uniform_int_distribution<int>(-3, 3)(rng);
    const int a = b + std::uniform_int_distribution<int>(0, 4)(rng);
    Poly p = random::poly(rng, 3, 4);
    Poly q = random::poly(rng, 3, 4);
    if (p.is_zero() && q.is_zero()) continue;
    const auto sub = line_subbundle({a, b}, p, q);
    const Poly& pn = sub.section.p;
    const Poly& qn = sub.section.q;
    const int c = sub.degree;
    if (!pn.is_zero() && !qn.is_zero()) {
      EXPECT_EQ(gcd(pn, qn), Poly(1));
    }
    const auto fits = [&](int d) {
      return pn.degree() <= Degree(a - d) && qn.degree() <= Degree(b - d);
    };
    EXPECT_TRUE(fits(c));
    EXPECT_FALSE(fits(c + 1));
    EXPECT_LE(c, a);
  }
}

TEST(Epsilon, Examples) {
  const auto x0sq = tensor(0, 0, 0, {"1", "0", "0"});
  const auto x0x1 = tensor(0, 0, 0, {"0", "1", "0"});
  const auto l01 = line_subbundle(x0sq.bundle(), P("0"), P("1"));
  const auto l10 = line_subbundle(x0sq.bundle(), P("1"), P("0"));
  EXPECT_EQ(epsilon_polar(l01, x0sq), 0);
  EXPECT_EQ(epsilon_multiplicity(l01, x0sq), 0);
  EXPECT_EQ(epsilon_of(l10, x0x1), 1);
  EXPECT_EQ(epsilon_of(l10, x0sq), 2);
}

TEST(Epsilon, PolarAgreesWithMultiplicityOnRandomPairs) {
  random::Rng rng(52);
  for (int k = 0; k < 150; ++k) {
    const auto t = random::tensor(rng);
    Poly p = random::poly(rng, 2, 3);
    Poly q = random::poly(rng, 2, 3);
    if (p.is_zero() && q.is_zero()) q = Poly(1);
    const auto sub = line_subbundle(t.bundle(), p, q);
    const int polar = epsilon_polar(sub, t);
    EXPECT_EQ(polar, epsilon_multiplicity(sub, t));
    EXPECT_EQ(polar, t.s() - oracle::multiplicity_by_derivatives(t.form(), sub.section));
  }
}

TEST(DestabilizingValue, Examples) {
  const auto x0sq = tensor(0, 0, 0, {"1", "0", "0"});
  const auto x0x1 = tensor(0, 0, 0, {"0", "1", "0"});
  const auto l01 = line_subbundle(x0sq.bundle(), P("0"), P("1"));
  const auto l10 = line_subbundle(x0sq.bundle(), P("1"), P("0"));
  for (const char* tau : {"1/3", "1", "5/2"}) {
    const Rational t = Rational::parse(tau);
    EXPECT_EQ(destabilizing_value(l01, x0sq, t), Rational(2) * t);
    EXPECT_EQ(destabilizing_value(l10, x0x1, t), Rational(0));
  }
  EXPECT_EQ(destabilizing_value(1, 2, 4, 2, Rational(3)), Rational(0));
  EXPECT_EQ(error_of([&] { destabilizing_value(l01, x0sq, Rational(0)); }).kind(), ErrorKind::NonpositiveTau);
  EXPECT_EQ(error_of([&] { destabilizing_value(l01, x0sq, Rational(-1)); }).kind(), ErrorKind::NonpositiveTau);
}

TEST(KPolynomial, Examples) {
  EXPECT_EQ(K_polynomial(0, 0, 2, 0, P("3/4")), P("3/2"));
  EXPECT_EQ(K_polynomial(1, -1, 3, 1, P("x")), P("3 + x"));
  EXPECT_EQ(K_polynomial(2, 1, 2, 0, P("1"), 5), P("5"));
  EXPECT_EQ(error_of([] { K_polynomial(0, 0, 2, 0, P("-1")); }).kind(), ErrorKind::InvalidDelta);
  EXPECT_EQ(hilbert_polynomial(2, 3), P("2*x + 5"));
  EXPECT_EQ(hilbert_polynomial(2, 3, 2), P("2*x + 1"));
}

TEST(KPolynomial, SignMatchesValueForConstantDelta) {
  random::Rng rng(53);
  for (int k = 0; k < 100; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 9, 7);
    for (const auto& c : candidate_sections(t).candidates) {
      const Rational at = K_polynomial(c.sub, t, Poly(tau)).eval(Rational(1000));
      EXPECT_EQ(at.sign(), destabilizing_value(c.sub, t, tau).sign());
    }
  }
}

TEST(CorrectedPolys, Additive) {
  const auto c = corrected_polys(1, -1, 3, 1, P("1/2"));
  EXPECT_EQ(c.bundle, P("2*x + 1 - 3/2"));
  EXPECT_EQ(c.sub, P("x + 2 - 1/2"));
  EXPECT_EQ(c.sub + c.quotient, c.bundle);
}

TEST(Twist, ValuesAreInvariant) {
  random::Rng rng(54);
  for (int k = 0; k < 60; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 9, 7);
    for (int shift = -3; shift <= 3; ++shift) {
      const auto tk = t.twisted(shift);
      EXPECT_EQ(tk.bundle().a, t.bundle().a + shift);
      EXPECT_EQ(tk.m_degree(), t.m_degree() + t.s() * shift);
      for (const auto& c : candidate_sections(t).candidates) {
        const auto sub = twisted(c.sub, shift);
        EXPECT_EQ(destabilizing_value(sub, tk, tau), destabilizing_value(c.sub, t, tau));
      }
    }
  }
}
