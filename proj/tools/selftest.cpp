#include "selftest.hpp"

#include <algorithm>
#include <numeric>

#include "tensorhn/envelope.hpp"
#include "tensorhn/kempf.hpp"
#include "tensorhn/oracles/oracles.hpp"
#include "tensorhn/oracles/random.hpp"
#include "tensorhn/stability.hpp"

namespace tensorhn::cli {

namespace {

struct Suite {
  const char* name;
  int cases = 0;
  int failures = 0;

  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  nlohmann::json to_json() const { return {{"name", name}, {"cases", cases}, {"failures", failures}}; }
};

Suite pava_suite(random::Rng& rng) {
  Suite suite{"pava"};
  for (int k = 0; k < 200; ++k) {
    const auto wv = random::weighted_vector(rng, 8);
    suite.check(envelope_maximize(wv).gamma == oracle::pava(wv.weights(), wv.values()));
  }
  return suite;
}

Suite multi_index_suite(random::Rng& rng) {
  Suite suite{"multi_index"};
  for (int k = 0; k < 50; ++k) {
    const int t = std::uniform_int_distribution<int>(1, 3)(rng);
    const int r = std::uniform_int_distribution<int>(t + 1, 5)(rng);
    const int s = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> pool(static_cast<std::size_t>(r - 1));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> ranks(pool.begin(), pool.begin() + t);
    std::sort(ranks.begin(), ranks.end());
    ranks.push_back(r);
    const auto nonzero = random::upward_closed_predicate(rng, ranks, s);
    for (int j = 0; j < 10; ++j) {
      std::vector<Rational> n;
      for (int i = 0; i < t; ++i) n.push_back(random::positive_rational(rng, 20, 20));
      const auto eps = epsilon_from_oracle(t, ranks, s, nonzero, n);
      suite.check(mu_closed_form(n, ranks, eps.eps, s, r) == oracle::rightmu_bruteforce(ranks, n, s, nonzero));
    }
  }
  return suite;
}

Suite polar_suite(random::Rng& rng) {
  Suite suite{"polar_vs_multiplicity"};
  for (int k = 0; k < 30; ++k) {
    const auto tensor = random::tensor(rng);
    for (const auto& cand : candidate_sections(tensor).candidates) {
      const int by_derivatives = oracle::multiplicity_by_derivatives(tensor.form(), cand.sub.section);
      const int polar = epsilon_polar(cand.sub, tensor);
      suite.check(polar == epsilon_multiplicity(cand.sub, tensor) && polar == tensor.s() - by_derivatives);
    }
  }
  return suite;
}

}  // namespace

nlohmann::json run_selftest(std::uint64_t seed) {
  random::Rng rng(seed);
  const Suite suites[] = {pava_suite(rng), multi_index_suite(rng), polar_suite(rng)};
  nlohmann::json out = {{"seed", seed}, {"suites", nlohmann::json::array()}};
  bool passed = true;
  for (const auto& s : suites) {
    out["suites"].push_back(s.to_json());
    passed = passed && s.failures == 0;
  }
  out["passed"] = passed;
  return out;
}

}  // namespace tensorhn::cli
