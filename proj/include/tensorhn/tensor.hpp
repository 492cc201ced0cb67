#pragma once

#include <vector>

#include "tensorhn/binary_form.hpp"
#include "tensorhn/poly.hpp"

namespace tensorhn {

/// E = O(a) + O(b) on P^1, a >= b after validation.
struct SplitBundle {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  static constexpr int rank() { return 2; }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

/// Unchecked input: coeffs[i] is a_i, the coefficient of X0^i X1^(s-i), where
/// X0 is the coordinate on the first factor O(a).
struct RawTensor {
  SplitBundle bundle;
  int s = 0;
  int m_degree = 0;
  std::vector<Poly> coeffs;
};

/// phi: E^{(x)s} -> O(m_degree) on P^1 given by a binary form of degree s.
/// Invariant: a >= b, deg a_i <= m_degree - i a - (s-i) b, form nonzero.
class Rank2Tensor {
 public:
  const SplitBundle& bundle() const { return bundle_; }
  int s() const { return form_.s(); }
  int m_degree() const { return m_degree_; }
  const BinaryForm& form() const { return form_; }
  /// True when validation exchanged the two factors to get a >= b.
  bool swapped() const { return swapped_; }

  /// Degree bound of a_i: m_degree - i a - (s-i) b.
  int coefficient_bound(int i) const;

  /// T (x) O(k): degrees shift by k, M by s k; the form is unchanged.
  Rank2Tensor twisted(int k) const;

  friend Rank2Tensor validate_tensor(const RawTensor& raw);

 private:
  Rank2Tensor(SplitBundle bundle, int m_degree, BinaryForm form, bool swapped)
      : bundle_(bundle), m_degree_(m_degree), form_(std::move(form)), swapped_(swapped) {}

  SplitBundle bundle_;
  int m_degree_ = 0;
  BinaryForm form_;
  bool swapped_ = false;
};

Rank2Tensor validate_tensor(const RawTensor& raw);

/// Saturated rank-1 subsheaf O(c) -> E spanned by the section (p, q).
struct LineSubbundle {
  Direction section;
  int degree = 0;

  friend bool operator==(const LineSubbundle&, const LineSubbundle&) = default;
};

/// Normalizes (p, q) and computes the saturated degree:
/// c = b if p = 0, c = a if q = 0, else min(a - deg p, b - deg q).
LineSubbundle line_subbundle(const SplitBundle& bundle, const Poly& p, const Poly& q);

/// L (x) O(k) inside E (x) O(k).
LineSubbundle twisted(const LineSubbundle& sub, int k);

/// Largest k with the k-fold polar derivative along L not identically zero.
int epsilon_polar(const LineSubbundle& sub, const Rank2Tensor& tensor);
/// s minus the multiplicity of L as a root of the form.
int epsilon_multiplicity(const LineSubbundle& sub, const Rank2Tensor& tensor);
/// eps(L); the polar characterization.
int epsilon_of(const LineSubbundle& sub, const Rank2Tensor& tensor);

/// 2 deg L - deg E + tau (s - 2 eps(L)).
Rational destabilizing_value(const LineSubbundle& sub, const Rank2Tensor& tensor, const Rational& tau);
Rational destabilizing_value(int sub_degree, int bundle_degree, int s, int eps, const Rational& tau);

/// Riemann-Roch on a curve of genus g: P(m) = rank m + degree + rank (1 - g).
Poly hilbert_polynomial(int rank, int degree, int genus = 0);

/// K(m) = 2 P_L(m) - P_E(m) + delta(m) (s - 2 eps). On curves the m-terms cancel.
Poly K_polynomial(int sub_degree, int bundle_degree, int s, int eps, const Poly& delta, int genus = 0);
Poly K_polynomial(const LineSubbundle& sub, const Rank2Tensor& tensor, const Poly& delta);

/// Corrected Hilbert polynomials: P_E - delta s, P_L - delta eps, and their difference.
struct CorrectedPolys {
  Poly bundle;
  Poly sub;
  Poly quotient;
};

CorrectedPolys corrected_polys(int sub_degree, int bundle_degree, int s, int eps, const Poly& delta, int genus = 0);

}  // namespace tensorhn
