#pragma once

#include <optional>
#include <vector>

#include "tensorhn/poly.hpp"

namespace tensorhn {

/// A point of P^1 over Q(x), written as the homogeneous pair (p : q) with
/// p, q in Q[x]. Linear factor of a form vanishing there: q*X0 - p*X1.
struct Direction {
  Poly p;
  Poly q;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Canonical representative: gcd(p, q) = 1 and q monic, or (1, 0) when q = 0.
Direction normalize_direction(const Poly& p, const Poly& q);

/// Homogeneous form sum_i a_i(x) X0^i X1^(s-i) with Q[x] coefficients.
/// Degree 0 forms are allowed (they arise from iterated polar derivatives).
class BinaryForm {
 public:
  BinaryForm() = default;
  /// coeffs[i] multiplies X0^i X1^(s-i); s = coeffs.size() - 1.
  explicit BinaryForm(std::vector<Poly> coeffs);

  int s() const { return static_cast<int>(a_.size()) - 1; }
  const Poly& coeff(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const std::vector<Poly>& coeffs() const { return a_; }
  bool is_zero() const;

  /// F(p, q) as an element of Q[x].
  Poly evaluate(const Direction& v) const;
  /// Substitutes x = x0, giving a binary form over Q.
  std::vector<Rational> fiber(const Rational& x0) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Poly> a_;
};

/// p*dF/dX0 + q*dF/dX1, a form of degree s-1.
BinaryForm polar_derivative(const BinaryForm& f, const Direction& v);

/// Exact quotient of f by the linear form q*X0 - p*X1 over Q[x], if it divides.
std::optional<BinaryForm> divide_linear(const BinaryForm& f, const Direction& v);

/// Multiplicity of the direction v as a root of f (f must be nonzero).
int root_multiplicity(const BinaryForm& f, const Direction& v);

struct RootSection {
  Direction direction;
  int multiplicity = 0;
};

/// A factor of t-degree >= 2 with no roots in Q(x). Squarefree in t; it is
/// certified irreducible over Q(x) when its degree is 2 or 3.
struct MultisectionFactor {
  BinaryForm factor;
  int multiplicity = 0;
  bool irreducible = false;
};

struct FormRoots {
  std::vector<RootSection> roots;  // sorted canonically, infinity (1,0) last
  std::vector<MultisectionFactor> multisections;
  /// f = content * prod linear^mult * prod multisection^mult, content in Q[x].
  Poly content;

  int linear_degree() const;
};

/// Every root t = p/q in Q(x) of the dehomogenized form (including the root
/// at infinity (1:0)), with multiplicities; residual higher-degree factors are
/// reported as multisections.
FormRoots rational_function_roots(const BinaryForm& f);

}  // namespace tensorhn
