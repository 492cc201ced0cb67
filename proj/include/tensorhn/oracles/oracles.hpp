#pragma once

// Reference computations that deliberately take a different route from the
// library: they back the test suites and the CLI selftest.

#include <span>
#include <vector>

#include "tensorhn/binary_form.hpp"
#include "tensorhn/kempf.hpp"

namespace tensorhn::oracle {

/// Weighted increasing isotonic regression by pool-adjacent-violators.
std::vector<Rational> pava(std::span<const Rational> weights, std::span<const Rational> values);

/// min over nonzero multi-indexes of sum_k gamma_{r_{i_k}}, with gamma built
/// explicitly as sum_i n_i gamma^{(r_i)}, gamma^{(k)} = (k-r,...,k-r, k,...,k).
Rational rightmu_bruteforce(std::span<const int> ranks, std::span<const Rational> n, int s,
                            const MultiIndexPredicate& nonzero);

/// Multiplicity of (p : q) as a root of f via the order of vanishing of
/// repeated partial derivatives (d/dX0 when q != 0, d/dX1 otherwise).
int multiplicity_by_derivatives(const BinaryForm& f, const Direction& v);

}  // namespace tensorhn::oracle
