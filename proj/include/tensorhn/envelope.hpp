#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tensorhn/rational.hpp"

namespace tensorhn {

/// A real number sign(x)*sqrt(square) kept exactly as (sign, x^2). Used for
/// values of the form (G, v)/|G| which are irrational in general.
struct SignedSquare {
  int sign = 0;
  Rational square;

  static SignedSquare from_ratio(const Rational& numerator, const Rational& norm_squared);

  friend bool operator==(const SignedSquare& a, const SignedSquare& b) {
    return a.sign == b.sign && (a.sign == 0 || a.square == b.square);
  }
  friend std::strong_ordering operator<=>(const SignedSquare& a, const SignedSquare& b);
};

/// Diagonal inner-product data (weights b^i > 0) and a balanced nonzero
/// vector v, i.e. sum_i b^i v_i = 0.
class WeightedVector {
 public:
  WeightedVector(std::vector<Rational> weights, std::vector<Rational> values);

  std::size_t size() const { return b_.size(); }
  const std::vector<Rational>& weights() const { return b_; }
  const std::vector<Rational>& values() const { return v_; }

  /// (x, y) = sum_i b^i x_i y_i.
  Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  std::vector<Rational> b_;
  std::vector<Rational> v_;
};

/// Cumulative graph of a filtration: points (b_i, w_i), i = 0..t+1, starting
/// at the origin, with step data b^i and w^i = -b^i v_i.
struct FiltrationGraph {
  std::vector<Rational> step_b;
  std::vector<Rational> step_w;
  std::vector<std::pair<Rational, Rational>> points;

  static FiltrationGraph from_steps(std::vector<Rational> step_b, std::vector<Rational> step_w);
  static FiltrationGraph from_vector(const WeightedVector& wv);

  /// v_i = -w^i / b^i.
  WeightedVector weighted_vector() const;
  /// Slopes of the graph, -v_i.
  std::vector<Rational> slopes() const;
};

struct EnvelopeResult {
  /// Points (b_i, w~_i) of the least concave majorant, one per graph vertex.
  std::vector<std::pair<Rational, Rational>> envelope;
  /// Gamma_i = -(w~_i - w~_{i-1}) / b^i, nondecreasing.
  std::vector<Rational> gamma;
  /// mu_v(Gamma_v) as a signed square; sign 0 means no destabilizing direction.
  SignedSquare mu;
};

/// Maximizes mu_v(G) = (G, v)/|G| over the closed cone G_1 <= ... <= G_{t+1}.
///
/// Orientation: the graph of cumulative sums (b_i, w_i) is majorized from
/// above by its least concave majorant (the "convex envelope" drawn above the
/// graph). Its slopes decrease, so Gamma = minus the slopes increases and lies
/// in the closed cone. Equivalently Gamma is the weighted increasing isotonic
/// regression of v, so (Gamma, v) = |Gamma|^2 and mu^2 = sum b^i Gamma_i^2.
EnvelopeResult envelope_maximize(const WeightedVector& wv);

/// mu_v(G) for an arbitrary nonzero G (not necessarily in the cone).
SignedSquare mu_v(const WeightedVector& wv, const std::vector<Rational>& gamma);

std::string to_string(const SignedSquare& x);

}  // namespace tensorhn
