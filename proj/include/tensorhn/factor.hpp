#pragma once

#include <vector>

#include "tensorhn/poly.hpp"

namespace tensorhn {

struct PolyFactor {
  Poly factor;  // monic
  int multiplicity = 0;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// f = constant * prod factor^multiplicity.
struct Factorization {
  Rational constant;
  std::vector<PolyFactor> factors;

  Poly expand() const;
};

/// Yun decomposition: squarefree, pairwise coprime monic parts with strictly
/// increasing multiplicities.
Factorization squarefree_decompose(const Poly& f);

/// Complete factorization into monic irreducibles over Q (Kronecker's method
/// after stripping rational roots). Factors are sorted by (degree, coefficients).
Factorization factor_rational(const Poly& f);

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const Poly& f);

/// All monic divisors of f given its factorization (including 1 and monic(f)).
std::vector<Poly> monic_divisors(const Factorization& fac);

}  // namespace tensorhn
