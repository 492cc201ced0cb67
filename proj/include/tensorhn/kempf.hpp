#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tensorhn/envelope.hpp"
#include "tensorhn/poly.hpp"

namespace tensorhn {

/// Multi-index data of a filtration 0 < E_1 < ... < E_{t+1} = E.
struct MultiIndexEpsilon {
  std::vector<int> i0;        // minimizing multi-index, sorted, 1-based
  std::vector<int> eps;       // eps_i, i = 1..t+1
  std::vector<int> eps_step;  // eps^i = eps_i - eps_{i-1}, eps_0 = 0
};

/// Whether the tensor restricted to E_{i_1} x ... x E_{i_s} is nonzero.
using MultiIndexPredicate = std::function<bool(std::span<const int>)>;

/// Brute force over {1..t+1}^s. With weights n_1..n_t the minimizer of
/// sum_k gamma_{r_{i_k}} is returned (ties broken lexicographically). Without
/// weights the minimizer is the multi-index whose sorted rank tuple is
/// lexicographically least; this is weight independent when the predicate
/// only depends on ranks, which is the rank-2 situation.
MultiIndexEpsilon epsilon_from_oracle(int t, std::span<const int> ranks, int s,
                                      const MultiIndexPredicate& nonzero,
                                      const std::optional<std::vector<Rational>>& weights = std::nullopt);

/// sum_{i=1}^t n_i (s r_i - eps_i r).
Rational mu_closed_form(std::span<const Rational> n, std::span<const int> ranks, std::span<const int> eps,
                        int s, int r);

/// Data entering the GIT weight ratio a2/a1 = r delta(m) / (P(m) - s delta(m)).
struct KempfParameters {
  int r = 2;
  int s = 1;
  Poly delta;
  Poly hilbert;   // P_E(m)
  int dim_x = 1;  // n = dim X

  void validate() const;
  Rational ratio(const Rational& m) const;
};

/// A filtration of V by subspaces, cumulative data for i = 1..t+1
/// (dims.back() = dim V, ranks.back() = r, eps.back() = s).
struct FiltrationData {
  std::vector<Integer> dims;
  std::vector<int> ranks;
  std::vector<int> eps;

  static FiltrationData from_steps(std::span<const Integer> dim_steps, std::span<const int> rank_steps,
                                   std::span<const int> eps_steps);
  int length() const { return static_cast<int>(dims.size()); }
  Integer dim_step(int i) const;  // dim V^i, 1-based
  int rank_step(int i) const;
  int eps_step(int i) const;
};

/// Graph of the filtration at the integer m:
///   b^i = dim V^i / m^n,
///   w^i = (m/dim V) [r dim V^i - r^i dim V + (a2/a1)(s dim V^i - eps^i dim V)].
FiltrationGraph build_graph(const FiltrationData& data, const KempfParameters& params, long m);

/// 1-PS vector Gamma from positive weights: Gamma_{i+1} - Gamma_i = n_i dim V,
/// sum_i dim V^i Gamma_i = 0.
std::vector<Rational> gamma_from_weights(const FiltrationData& data, std::span<const Rational> n);

/// Kempf function
///   sum_i n_i (r dim V_i - r_i dim V + (a2/a1)(s dim V_i - eps_i dim V)) / sqrt(sum dim V^i Gamma_i^2)
/// as a signed square. A trivial filtration (t = 0) yields sign 0.
SignedSquare kempf_function(const FiltrationData& data, std::span<const Rational> n,
                            const KempfParameters& params, long m);

/// r K / (sqrt(P) (P - s delta)) at m as a signed square, where K is the
/// value of 2 P_L - P_E + delta (s - 2 eps) at m. This is the Kempf function
/// of a one-step filtration when Gamma is normalized by rank,
/// Gamma = (P/r)(-n1, n1), instead of by trace.
SignedSquare one_step_closed_form(const Rational& k_value, const KempfParameters& params, const Rational& m);

/// Rank 2, one step with dim V^1 = p1, dim V^2 = p2: the trace-zero Kempf
/// value squared over the closed form squared, (p1 + p2)^2 / (4 p1 p2) >= 1.
/// It is 1 exactly when p1 = p2 and tends to 1 as m grows.
Rational one_step_norm_ratio(const Rational& p1, const Rational& p2);

}  // namespace tensorhn
