#pragma once

#include <random>
#include <vector>

#include "tensorhn/envelope.hpp"
#include "tensorhn/kempf.hpp"
#include "tensorhn/tensor.hpp"

namespace tensorhn::random {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational rational(Rng& rng, int max_num, int max_den);
Rational positive_rational(Rng& rng, int max_num, int max_den);

/// Balanced weighted vector of length in [1, max_len]; v is projected so
/// that sum b^i v_i = 0 and rerolled when it vanishes.
WeightedVector weighted_vector(Rng& rng, int max_len, int max_num = 50, int max_den = 50);

/// Random nondecreasing vector (a point of the closed cone).
std::vector<Rational> cone_point(Rng& rng, std::size_t len, int max_num = 50, int max_den = 50);

/// A predicate on multi-indexes closed upward in the rank order, nonzero at
/// the top multi-index.
MultiIndexPredicate upward_closed_predicate(Rng& rng, std::vector<int> ranks, int s);

struct TensorShape {
  int max_s = 4;
  int max_coeff_degree = 3;
  int max_abs_bundle_degree = 3;
};

/// A valid rank-2 tensor. Half of the draws are products of random linear
/// forms over Q[x] (so the form has many Q(x)-roots), the rest are dense.
Rank2Tensor tensor(Rng& rng, const TensorShape& shape = {});

/// Product of random linear forms only: every root lies in Q(x).
Rank2Tensor split_tensor(Rng& rng, const TensorShape& shape = {});

Poly poly(Rng& rng, int max_degree, int max_coeff);

}  // namespace tensorhn::random
