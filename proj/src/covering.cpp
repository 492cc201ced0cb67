#include "tensorhn/covering.hpp"

#include <algorithm>

#include "tensorhn/error.hpp"
#include "tensorhn/factor.hpp"

namespace tensorhn {

NormalizedTensor normalize(const Rank2Tensor& tensor) {
  const int k = -std::max(tensor.bundle().a, tensor.bundle().b);
  return {tensor.twisted(k), k};
}

SectionDivisor intersection_numbers(const LineSubbundle& sub, const NormalizedTensor& normalized) {
  const int eps = epsilon_of(sub, normalized.tensor);
  return {sub, sub.degree, -normalized.e() - sub.degree, normalized.tensor.s() - eps};
}

FiberClassification fiber_point_stability(const Rank2Tensor& tensor, const Rational& x0) {
  const std::vector<Rational> c = tensor.form().fiber(x0);
  const int s = tensor.s();
  int top = s;
  while (top >= 0 && c[static_cast<std::size_t>(top)].is_zero()) --top;
  if (top < 0) throw Error(ErrorKind::DegenerateFiber, "form vanishes on the fiber over x = " + x0.to_string());
  // Multiplicity of (1 : 0) is the number of vanishing top coefficients; the
  // finite points come from the squarefree structure of the dehomogenization.
  int best = s - top;
  const Poly dehomogenized(std::vector<Rational>(c.begin(), c.begin() + top + 1));
  for (const auto& part : squarefree_decompose(dehomogenized).factors) best = std::max(best, part.multiplicity);
  return {x0, s, best, 2 * best > s};
}

int fiber_multiplicity_at(const Rank2Tensor& tensor, const Rational& x0, const Direction& direction) {
  std::vector<Poly> c;
  for (const auto& v : tensor.form().fiber(x0)) c.emplace_back(v);
  const BinaryForm fiber(std::move(c));
  if (fiber.is_zero()) throw Error(ErrorKind::DegenerateFiber, "form vanishes on the fiber over x = " + x0.to_string());
  const Direction point = normalize_direction(Poly(direction.p.eval(x0)), Poly(direction.q.eval(x0)));
  return root_multiplicity(fiber, point);
}

CoveringReport covering_stability(const Rank2Tensor& tensor, const Rational& tau, const std::vector<Rational>& fibers,
                                  const StabilityOptions& options) {
  const NormalizedTensor normalized = normalize(tensor);
  const StabilityReport report = stability(normalized.tensor, tau, options);
  const int s = normalized.tensor.s();
  const int deg_e = normalized.tensor.bundle().degree();

  CoveringReport out;
  out.verdict = report.verdict;
  out.value = report.value;
  out.e = normalized.e();
  out.twist = normalized.twist;
  out.complete = report.complete;
  out.tie = report.tie();
  for (const auto& row : report.candidates) {
    const auto& sub = row.candidate.sub;
    const int eps = row.candidate.eps;
    const SectionDivisor d{sub, sub.degree, -out.e - sub.degree, s - eps};
    const Rational stab = tau * Rational(s - 2 * eps);
    out.rows.push_back({d, eps, Rational(-2 * d.c0_dot_d - out.e) + stab, Rational(2 * sub.degree - deg_e) + stab});
  }
  if (report.verdict == Verdict::Unstable) out.hn_section = out.rows[report.maximizers.front()].divisor;
  for (const auto& x0 : fibers) out.fibers.push_back(fiber_point_stability(tensor, x0));
  return out;
}

}  // namespace tensorhn
