#include "tensorhn/oracles/random.hpp"

#include <algorithm>

namespace tensorhn::random {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rank2Tensor finish(Rng& rng, const TensorShape& shape, int s, std::vector<Poly> coeffs) {
  const int b = uniform(rng, -shape.max_abs_bundle_degree, shape.max_abs_bundle_degree);
  const int a = b + uniform(rng, 0, 3);
  int m_degree = std::numeric_limits<int>::min();
  for (int i = 0; i <= s; ++i) {
    const Poly& c = coeffs[static_cast<std::size_t>(i)];
    if (!c.is_zero()) m_degree = std::max(m_degree, c.deg() + i * a + (s - i) * b);
  }
  m_degree += uniform(rng, 0, 1);
  RawTensor raw{{a, b}, s, m_degree, std::move(coeffs)};
  if (coin(rng, 0.25)) {
    // Present the factors in the other order to exercise normalization.
    std::swap(raw.bundle.a, raw.bundle.b);
    std::reverse(raw.coeffs.begin(), raw.coeffs.end());
  }
  return validate_tensor(raw);
}

}  // namespace

Rational rational(Rng& rng, int max_num, int max_den) {
  return Rational(Integer(uniform(rng, -max_num, max_num)), Integer(uniform(rng, 1, max_den)));
}

Rational positive_rational(Rng& rng, int max_num, int max_den) {
  return Rational(Integer(uniform(rng, 1, max_num)), Integer(uniform(rng, 1, max_den)));
}

WeightedVector weighted_vector(Rng& rng, int max_len, int max_num, int max_den) {
  for (;;) {
    const int len = uniform(rng, 2, std::max(2, max_len));
    std::vector<Rational> b;
    std::vector<Rational> v;
    Rational balance;
    Rational total;
    for (int i = 0; i < len; ++i) {
      b.push_back(positive_rational(rng, max_num, max_den));
      v.push_back(rational(rng, max_num, max_den));
      balance += b.back() * v.back();
      total += b.back();
    }
    const Rational shift = balance / total;
    bool nonzero = false;
    for (auto& x : v) {
      x -= shift;
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) return WeightedVector(std::move(b), std::move(v));
  }
}

std::vector<Rational> cone_point(Rng& rng, std::size_t len, int max_num, int max_den) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(rational(rng, max_num, max_den));
  // Occasionally repeat entries so the boundary of the cone is sampled too.
  for (std::size_t i = 1; i < len; ++i) {
    if (coin(rng, 0.2)) out[i] = out[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiIndexPredicate upward_closed_predicate(Rng& rng, std::vector<int> ranks, int s) {
  const int levels = static_cast<int>(ranks.size());
  std::vector<std::vector<int>> generators;
  generators.emplace_back(static_cast<std::size_t>(s), ranks.back());
  const int extra = uniform(rng, 0, 3);
  for (int g = 0; g < extra; ++g) {
    std::vector<int> rk;
    for (int k = 0; k < s; ++k) rk.push_back(ranks[static_cast<std::size_t>(uniform(rng, 0, levels - 1))]);
    std::sort(rk.begin(), rk.end());
    generators.push_back(std::move(rk));
  }
  return [ranks = std::move(ranks), generators = std::move(generators)](std::span<const int> idx) {
    std::vector<int> rk;
    for (int i : idx) rk.push_back(ranks[static_cast<std::size_t>(i - 1)]);
    std::sort(rk.begin(), rk.end());
    for (const auto& g : generators) {
      bool dominates = true;
      for (std::size_t k = 0; k < rk.size(); ++k) dominates = dominates && rk[k] >= g[k];
      if (dominates) return true;
    }
    return false;
  };
}

Poly poly(Rng& rng, int max_degree, int max_coeff) {
  const int d = uniform(rng, 0, std::max(0, max_degree));
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(uniform(rng, -max_coeff, max_coeff));
  return Poly(std::move(c));
}

Rank2Tensor split_tensor(Rng& rng, const TensorShape& shape) {
  const int s = uniform(rng, 1, shape.max_s);
  int budget = shape.max_coeff_degree;
  std::vector<Poly> form{Poly(Rational(Integer(uniform(rng, 1, 3)) * (coin(rng, 0.5) ? 1 : -1)))};
  std::vector<std::pair<Poly, Poly>> pool;
  for (int j = 0; j < s; ++j) {
    Poly p;
    Poly q;
    // Reuse an earlier factor now and then to create repeated roots.
    if (!pool.empty() && coin(rng, 0.35)) {
      std::tie(p, q) = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    } else {
      const int kind = uniform(rng, 0, 3);
      const int deg = budget > 0 ? uniform(rng, 0, std::min(2, budget)) : 0;
      if (kind == 0) {
        p = Poly(1);
      } else if (kind == 1) {
        q = Poly(1);
      } else {
        do {
          p = poly(rng, deg, 3);
          q = poly(rng, deg, 3);
        } while (p.is_zero() || q.is_zero());
      }
    }
    const int used = std::max(p.is_zero() ? 0 : p.deg(), q.is_zero() ? 0 : q.deg());
    if (used > budget) {
      p = Poly(1);
      q = Poly();
    } else {
      budget -= used;
    }
    pool.emplace_back(p, q);
    // Multiply by the linear form q X0 - p X1.
    std::vector<Poly> next(form.size() + 1);
    for (std::size_t i = 0; i < form.size(); ++i) {
      next[i + 1] += form[i] * q;
      next[i] -= form[i] * p;
    }
    form = std::move(next);
  }
  return finish(rng, shape, s, std::move(form));
}

Rank2Tensor tensor(Rng& rng, const TensorShape& shape) {
  if (coin(rng, 0.5)) return split_tensor(rng, shape);
  const int s = uniform(rng, 1, shape.max_s);
  std::vector<Poly> coeffs(static_cast<std::size_t>(s + 1));
  bool any = false;
  while (!any) {
    for (auto& c : coeffs) {
      c = coin(rng, 0.3) ? Poly() : poly(rng, shape.max_coeff_degree, 4);
      any = any || !c.is_zero();
    }
  }
  return finish(rng, shape, s, std::move(coeffs));
}

}  // namespace tensorhn::random
