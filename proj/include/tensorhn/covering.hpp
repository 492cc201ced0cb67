#pragma once

#include <optional>
#include <vector>

#include "tensorhn/stability.hpp"

namespace tensorhn {

/// Twist E' = E (x) O(k) with max(a', b') = 0, so P(E') is the ruled surface
/// with invariant e = -deg E' >= 0.
struct NormalizedTensor {
  Rank2Tensor tensor;
  int twist = 0;

  int e() const { return -tensor.bundle().degree(); }
};

NormalizedTensor normalize(const Rank2Tensor& tensor);

/// Section D of P(E') given by a line subbundle L of the normalized bundle.
struct SectionDivisor {
  LineSubbundle sub;
  int deg_sigma = 0;  // deg L
  int c0_dot_d = 0;   // from deg(sigma) = -e - C0.D
  int branches = 0;   // s - eps(L), sheets of the covering along D
};

SectionDivisor intersection_numbers(const LineSubbundle& sub, const NormalizedTensor& normalized);

/// Point configuration on one fiber: the form evaluated at x = x0.
struct FiberClassification {
  Rational x0;
  int s = 0;
  int max_multiplicity = 0;  // largest root multiplicity over C
  bool unstable = false;     // max_multiplicity > s/2
};

FiberClassification fiber_point_stability(const Rank2Tensor& tensor, const Rational& x0);

/// Multiplicity of the point (p(x0) : q(x0)) in the fiber over x0.
int fiber_multiplicity_at(const Rank2Tensor& tensor, const Rational& x0, const Direction& direction);

struct CoveringRow {
  SectionDivisor divisor;
  int eps = 0;
  Rational intersection_value;  // -2 C0.D - e + tau (s - 2 eps)
  Rational bundle_value;        // 2 deg L - deg E' + tau (s - 2 eps)
};

struct CoveringReport {
  Verdict verdict = Verdict::Stable;
  std::optional<SectionDivisor> hn_section;
  Rational value;
  int e = 0;
  int twist = 0;
  std::vector<CoveringRow> rows;
  std::vector<FiberClassification> fibers;
  bool complete = true;
  bool tie = false;
};

CoveringReport covering_stability(const Rank2Tensor& tensor, const Rational& tau,
                                  const std::vector<Rational>& fibers = {}, const StabilityOptions& options = {});

}  // namespace tensorhn
