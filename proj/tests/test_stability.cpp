#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "tensorhn/envelope.hpp"
#include "tensorhn/error.hpp"
#include "tensorhn/kempf.hpp"
#include "tensorhn/oracles/random.hpp"
#include "tensorhn/stability.hpp"

using namespace tensorhn;
using fixtures::dir;
using fixtures::P;
using fixtures::Q;
using fixtures::tensor;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

const Candidate* find(const CandidateSet& set, const Direction& d) {
  for (const auto& c : set.candidates) {
    if (c.sub.section == d) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Candidates, DoubleRoot) {
  const auto set = candidate_sections(tensor(0, 0, 0, {"1", "0", "0"}));
  ASSERT_EQ(set.candidates.size(), 2u);
  const auto* root = find(set, dir("0", "1"));
  const auto* generic = find(set, dir("1", "0"));
  ASSERT_TRUE(root && generic);
  EXPECT_EQ(root->eps, 0);
  EXPECT_TRUE(root->root);
  EXPECT_EQ(generic->eps, 2);
  EXPECT_FALSE(generic->root);
  EXPECT_TRUE(set.complete);
  EXPECT_FALSE(set.nondegenerate);
}

TEST(Candidates, RootsOverFunctionField) {
  // x X0^2 + X0 X1 = X0 (x X0 + X1).
  const auto set = candidate_sections(tensor(0, 0, 2, {"x", "1", "0"}));
  const auto* zero = find(set, dir("0", "1"));
  const auto* moving = find(set, dir("-1", "x"));
  const auto* generic = find(set, dir("1", "0"));
  ASSERT_TRUE(zero && moving && generic);
  EXPECT_EQ(zero->sub.degree, 0);
  EXPECT_EQ(zero->eps, 1);
  EXPECT_EQ(moving->sub.degree, -1);
  EXPECT_EQ(moving->eps, 1);
  EXPECT_EQ(generic->eps, 2);
  EXPECT_TRUE(set.nondegenerate);
}

TEST(Candidates, GenericSectionAvoidsRoots) {
  // (X0 - X1)^2 X1: (1,0) and (1,1) are roots, so the eps = s representative
  // is a constant section of degree b that is not a root.
  const auto set = candidate_sections(tensor(0, 0, 0, {"0", "1", "-2", "1"}));
  const Candidate* rep = nullptr;
  for (const auto& c : set.candidates) {
    if (!c.root) rep = &c;
  }
  ASSERT_NE(rep, nullptr);
  EXPECT_EQ(rep->eps, 3);
  EXPECT_EQ(rep->sub.degree, 0);
  const auto* double_root = find(set, dir("1", "1"));
  ASSERT_NE(double_root, nullptr);
  EXPECT_EQ(double_root->eps, 1);
}

TEST(Stability, WorkedVerdicts) {
  const auto x0sq = tensor(0, 0, 0, {"1", "0", "0"});
  const auto rep = stability(x0sq, Rational(1));
  EXPECT_EQ(rep.verdict, Verdict::Unstable);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_EQ(rep.witness->section, dir("0", "1"));
  EXPECT_EQ(rep.value, Rational(2));
  EXPECT_TRUE(rep.verdict_certain());
  EXPECT_TRUE(rep.witness_certain());

  const auto x0x1 = tensor(0, 0, 0, {"0", "1", "0"});
  for (const char* tau : {"1/3", "1", "7/2"}) {
    const auto r = stability(x0x1, Q(tau));
    EXPECT_EQ(r.verdict, Verdict::Semistable) << tau;
    EXPECT_EQ(r.value, Rational(0));
    EXPECT_EQ(r.maximizers.size(), 2u);
  }

  // O(0) + O(-2), s = 1, F = X1: the first factor is a root with eps = 0.
  const auto x1 = tensor(0, -2, -2, {"0", "1"});
  const auto r = stability(x1, Rational(1, 2));
  EXPECT_EQ(r.verdict, Verdict::Unstable);
  EXPECT_EQ(r.witness->section, dir("1", "0"));
  EXPECT_EQ(r.value, Rational(5, 2));
}

TEST(Stability, MixedExamples) {
  // X0 X1 on O(1) + O(0): roots (0,1) value -1 and (1,0) value 1 for eps 1.
  const auto t = tensor(1, 0, 1, {"0", "1", "0"});
  EXPECT_EQ(stability(t, Rational(1)).verdict, Verdict::Unstable);
  // X0^2 + X1^2 has no rational roots; eps = s everywhere.
  const auto r = stability(tensor(0, 0, 0, {"1", "0", "1"}), Rational(1));
  EXPECT_EQ(r.verdict, Verdict::Stable);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.verdict_certain());
  ASSERT_TRUE(r.multisection_bound.has_value());
  EXPECT_EQ(*r.multisection_bound, Rational(0));
}

TEST(Stability, ParallelMatchesSerial) {
  random::Rng rng(61);
  for (int k = 0; k < 40; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 9, 7);
    const auto a = stability(t, tau, {1});
    const auto b = stability(t, tau, {4});
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.maximizers, b.maximizers);
    ASSERT_EQ(a.candidates.size(), b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      EXPECT_EQ(a.candidates[i].value, b.candidates[i].value);
      EXPECT_EQ(a.candidates[i].candidate.sub, b.candidates[i].candidate.sub);
    }
  }
}

TEST(Hn, Examples) {
  const auto hn = hn_subsheaf(tensor(0, 0, 0, {"1", "0", "0"}), Rational(1));
  EXPECT_EQ(hn.sub.section, dir("0", "1"));
  EXPECT_EQ(hn.value, Rational(2));
  EXPECT_EQ(hn.corrected.sub, hilbert_polynomial(1, 0));
  EXPECT_EQ(hn.corrected.bundle, hilbert_polynomial(2, 0) - Poly(2));
  EXPECT_EQ(hn.excess, Poly(2));

  // O(3) + O(0), F = X1^2: the first factor is a double root.
  const auto hn2 = hn_subsheaf(tensor(3, 0, 0, {"0", "0", "1"}), Rational(1, 4));
  EXPECT_EQ(hn2.sub.section, dir("1", "0"));
  EXPECT_EQ(hn2.sub.degree, 3);
  EXPECT_EQ(hn2.value, Rational(7, 2));

  EXPECT_EQ(kind_of([] { hn_subsheaf(tensor(0, 0, 0, {"0", "1", "0"}), Rational(1)); }), ErrorKind::NotUnstable);
}

// Excess 2 Pbar_L - Pbar_E is the destabilizing value itself on curves.
TEST(Hn, ExcessEqualsValue) {
  random::Rng rng(62);
  int seen = 0;
  for (int k = 0; k < 300 && seen < 40; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 9, 7);
    if (stability(t, tau).verdict != Verdict::Unstable) continue;
    ++seen;
    const auto hn = hn_analysis(t, tau);
    EXPECT_EQ(hn.excess, Poly(hn.value));
    EXPECT_GT(hn.value, Rational(0));
    EXPECT_FALSE(hn.tie);
  }
  EXPECT_GT(seen, 0);
}

// A two-step filtration L(-j) < L < E: with the eps of the multi-index
// minimum the weighted sum never exceeds (n1 + n2) times the one-step
// maximum, so checking one-step filtrations suffices.
TEST(Stability, OneStepSufficiency) {
  random::Rng rng(63);
  for (int k = 0; k < 80; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 9, 7);
    const auto rep = stability(t, tau);
    const int s = t.s();
    const int d = t.bundle().degree();
    for (const auto& row : rep.candidates) {
      const int c = row.candidate.sub.degree;
      const int eps_l = row.candidate.eps;
      const int j = std::uniform_int_distribution<int>(0, 3)(rng);
      const int ranks[] = {1, 1, 2};
      // A slot from E_1 or E_2 (both generically the line L) contributes to
      // the restriction only up to eps(L) times.
      const auto nonzero = [&](std::span<const int> idx) {
        return std::count_if(idx.begin(), idx.end(), [](int i) { return i <= 2; }) <= eps_l;
      };
      const std::vector<Rational> n{random::positive_rational(rng, 9, 4), random::positive_rational(rng, 9, 4)};
      const auto eps = epsilon_from_oracle(2, ranks, s, nonzero, n);
      const Rational sum = n[0] * Rational(2 * (c - j) - d) + n[1] * Rational(2 * c - d) +
                           tau * mu_closed_form(n, ranks, eps.eps, s, 2);
      EXPECT_LE(sum, (n[0] + n[1]) * rep.value);
      if (rep.verdict != Verdict::Unstable) {
        EXPECT_LE(sum, Rational(0));
      }
    }
  }
}

// The graph of 0 < H^0(L(m)) < H^0(E(m)) has the HN subsheaf as the filter of
// the envelope maximizer, with mu matching the closed form.
TEST(Stability, KempfConsistency) {
  random::Rng rng(64);
  int seen = 0;
  for (int k = 0; k < 300 && seen < 10; ++k) {
    const auto t = random::tensor(rng);
    const Rational tau = random::positive_rational(rng, 5, 3);
    const auto rep = stability(t, tau);
    if (rep.verdict != Verdict::Unstable || !rep.witness_certain()) continue;
    ++seen;
    const int s = t.s();
    const int d = t.bundle().degree();
    const int c = rep.witness->degree;
    for (long m : {20L, 40L, 80L}) {
      const KempfParameters params{2, s, Poly(tau), hilbert_polynomial(2, d), 1};
      const Rational p_e = params.hilbert.eval(Rational(m));
      const Rational p_l = hilbert_polynomial(1, c).eval(Rational(m));
      const Integer dims[] = {p_l.numerator(), (p_e - p_l).numerator()};
      const int rank_steps[] = {1, 1};
      const int eps_steps[] = {rep.witness_eps, s - rep.witness_eps};
      const auto data = FiltrationData::from_steps(dims, rank_steps, eps_steps);
      const auto env = envelope_maximize(build_graph(data, params, m).weighted_vector());
      ASSERT_EQ(env.gamma.size(), 2u);
      EXPECT_LT(env.gamma[0], env.gamma[1]);
      const Rational k_m = K_polynomial(c, d, s, rep.witness_eps, Poly(tau)).eval(Rational(m));
      const Rational denom = p_e - Rational(s) * tau;
      const Rational mm(m);
      // Trace-zero weights: the closed form up to the factor P^2 / (4 P_L P_{E/L}).
      const Rational factor = p_e * p_e / (Rational(4) * p_l * (p_e - p_l));
      EXPECT_EQ(env.mu.sign, 1);
      EXPECT_EQ(env.mu.square, mm * mm * mm * Rational(4) * k_m * k_m / (p_e * denom * denom) * factor);
      EXPECT_EQ(one_step_norm_ratio(p_l, p_e - p_l), factor);
    }
  }
  EXPECT_GT(seen, 0);
}
