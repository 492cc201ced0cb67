#include "tensorhn/tensor.hpp"

#include <algorithm>
#include <utility>

#include "tensorhn/error.hpp"

namespace tensorhn {

int Rank2Tensor::coefficient_bound(int i) const {
  return m_degree_ - i * bundle_.a - (s() - i) * bundle_.b;
}

Rank2Tensor Rank2Tensor::twisted(int k) const {
  return Rank2Tensor({bundle_.a + k, bundle_.b + k}, m_degree_ + s() * k, form_, swapped_);
}

Rank2Tensor validate_tensor(const RawTensor& raw) {
  if (raw.s < 1) throw Error(ErrorKind::InvalidParameters, "tensor degree s must be positive");
  if (raw.coeffs.size() != static_cast<std::size_t>(raw.s + 1)) {
    throw Error(ErrorKind::InvalidParameters,
                "expected " + std::to_string(raw.s + 1) + " coefficients, got " + std::to_string(raw.coeffs.size()));
  }
  const auto& [a, b] = raw.bundle;
  bool all_zero = true;
  for (int i = 0; i <= raw.s; ++i) {
    const Poly& c = raw.coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    all_zero = false;
    const int bound = raw.m_degree - i * a - (raw.s - i) * b;
    if (c.deg() > bound) {
      throw Error(ErrorKind::DegreeMismatch, "coefficient a_" + std::to_string(i) + " = " + c.to_string() +
                                                 " has degree " + std::to_string(c.deg()) + " > bound " +
                                                 std::to_string(bound));
    }
  }
  if (all_zero) throw Error(ErrorKind::ZeroTensor, "all coefficients a_i vanish");
  if (a >= b) return Rank2Tensor(raw.bundle, raw.m_degree, BinaryForm(raw.coeffs), false);
  std::vector<Poly> reversed(raw.coeffs.rbegin(), raw.coeffs.rend());
  return Rank2Tensor({b, a}, raw.m_degree, BinaryForm(std::move(reversed)), true);
}

LineSubbundle line_subbundle(const SplitBundle& bundle, const Poly& p, const Poly& q) {
  Direction dir = normalize_direction(p, q);
  int c = 0;
  if (dir.p.is_zero()) {
    c = bundle.b;
  } else if (dir.q.is_zero()) {
    c = bundle.a;
  } else {
    c = std::min(bundle.a - dir.p.deg(), bundle.b - dir.q.deg());
  }
  return {std::move(dir), c};
}

LineSubbundle twisted(const LineSubbundle& sub, int k) { return {sub.section, sub.degree + k}; }

int epsilon_polar(const LineSubbundle& sub, const Rank2Tensor& tensor) {
  BinaryForm cur = tensor.form();
  for (int k = 1; k <= tensor.s(); ++k) {
    cur = polar_derivative(cur, sub.section);
    if (cur.is_zero()) return k - 1;
  }
  return tensor.s();
}

int epsilon_multiplicity(const LineSubbundle& sub, const Rank2Tensor& tensor) {
  return tensor.s() - root_multiplicity(tensor.form(), sub.section);
}

int epsilon_of(const LineSubbundle& sub, const Rank2Tensor& tensor) { return epsilon_polar(sub, tensor); }

Rational destabilizing_value(int sub_degree, int bundle_degree, int s, int eps, const Rational& tau) {
  if (tau.sign() <= 0) throw Error(ErrorKind::NonpositiveTau, "tau = " + tau.to_string() + " must be positive");
  return Rational(2 * sub_degree - bundle_degree) + tau * Rational(s - 2 * eps);
}

Rational destabilizing_value(const LineSubbundle& sub, const Rank2Tensor& tensor, const Rational& tau) {
  return destabilizing_value(sub.degree, tensor.bundle().degree(), tensor.s(), epsilon_of(sub, tensor), tau);
}

Poly hilbert_polynomial(int rank, int degree, int genus) {
  return Poly({Rational(degree + rank * (1 - genus)), Rational(rank)});
}

Poly K_polynomial(int sub_degree, int bundle_degree, int s, int eps, const Poly& delta, int genus) {
  if (delta.is_zero() || delta.lead().sign() <= 0) {
    throw Error(ErrorKind::InvalidDelta, "delta must have positive leading coefficient");
  }
  const Poly pl = hilbert_polynomial(1, sub_degree, genus);
  const Poly pe = hilbert_polynomial(2, bundle_degree, genus);
  return pl.scaled(Rational(2)) - pe + delta.scaled(Rational(s - 2 * eps));
}

Poly K_polynomial(const LineSubbundle& sub, const Rank2Tensor& tensor, const Poly& delta) {
  return K_polynomial(sub.degree, tensor.bundle().degree(), tensor.s(), epsilon_of(sub, tensor), delta, 0);
}

CorrectedPolys corrected_polys(int sub_degree, int bundle_degree, int s, int eps, const Poly& delta, int genus) {
  const Poly pe = hilbert_polynomial(2, bundle_degree, genus) - delta.scaled(Rational(s));
  const Poly pl = hilbert_polynomial(1, sub_degree, genus) - delta.scaled(Rational(eps));
  return {pe, pl, pe - pl};
}

}  // namespace tensorhn
