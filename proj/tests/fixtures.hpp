#pragma once

#include <string>
#include <vector>

#include "tensorhn/binary_form.hpp"
#include "tensorhn/poly.hpp"
#include "tensorhn/tensor.hpp"

namespace fixtures {

inline tensorhn::Poly P(const std::string& text) { return tensorhn::parse_poly(text); }

inline tensorhn::Rational Q(const std::string& text) { return tensorhn::Rational::parse(text); }

// Coefficients listed from a_s down to a_0.
inline std::vector<tensorhn::Poly> top_down(const std::vector<std::string>& coeffs) {
  std::vector<tensorhn::Poly> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) out[coeffs.size() - 1 - k] = P(coeffs[k]);
  return out;
}

inline tensorhn::BinaryForm form(const std::vector<std::string>& coeffs) {
  return tensorhn::BinaryForm(top_down(coeffs));
}

inline tensorhn::Rank2Tensor tensor(int a, int b, int m_degree, const std::vector<std::string>& coeffs) {
  const int s = static_cast<int>(coeffs.size()) - 1;
  return tensorhn::validate_tensor({{a, b}, s, m_degree, top_down(coeffs)});
}

inline tensorhn::Direction dir(const std::string& p, const std::string& q) { return {P(p), P(q)}; }

}  // namespace fixtures
