#include "tensorhn/envelope.hpp"

#include "tensorhn/error.hpp"

namespace tensorhn {

SignedSquare SignedSquare::from_ratio(const Rational& numerator, const Rational& norm_squared) {
  if (norm_squared.sign() <= 0) throw Error(ErrorKind::InvalidVector, "zero direction has no mu value");
  if (numerator.is_zero()) return {};
  return {numerator.sign(), numerator * numerator / norm_squared};
}

std::strong_ordering operator<=>(const SignedSquare& a, const SignedSquare& b) {
  if (a.sign != b.sign) return a.sign <=> b.sign;
  if (a.sign == 0) return std::strong_ordering::equal;
  return a.sign > 0 ? a.square <=> b.square : b.square <=> a.square;
}

std::string to_string(const SignedSquare& x) {
  if (x.sign == 0) return "0";
  return std::string(x.sign < 0 ? "-" : "") + "sqrt(" + x.square.to_string() + ")";
}

WeightedVector::WeightedVector(std::vector<Rational> weights, std::vector<Rational> values)
    : b_(std::move(weights)), v_(std::move(values)) {
  if (b_.empty() || b_.size() != v_.size()) {
    throw Error(ErrorKind::InvalidVector, "weights and values must have the same positive length");
  }
  Rational balance;
  bool nonzero = false;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i].sign() <= 0) throw Error(ErrorKind::InvalidVector, "weight b^" + std::to_string(i + 1) + " is not positive");
    balance += b_[i] * v_[i];
    nonzero = nonzero || !v_[i].is_zero();
  }
  if (!nonzero) throw Error(ErrorKind::InvalidVector, "v must be nonzero");
  if (!balance.is_zero()) throw Error(ErrorKind::InvalidVector, "sum b^i v_i = " + balance.to_string() + ", expected 0");
}

Rational WeightedVector::inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  if (x.size() != b_.size() || y.size() != b_.size()) throw Error(ErrorKind::InvalidVector, "dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < b_.size(); ++i) acc += b_[i] * x[i] * y[i];
  return acc;
}

FiltrationGraph FiltrationGraph::from_steps(std::vector<Rational> step_b, std::vector<Rational> step_w) {
  if (step_b.size() != step_w.size()) throw Error(ErrorKind::InvalidVector, "step length mismatch");
  FiltrationGraph g{std::move(step_b), std::move(step_w), {}};
  g.points.emplace_back(Rational(0), Rational(0));
  for (std::size_t i = 0; i < g.step_b.size(); ++i) {
    if (g.step_b[i].sign() <= 0) throw Error(ErrorKind::InvalidVector, "graph abscissae must increase strictly");
    const auto& [pb, pw] = g.points.back();
    g.points.emplace_back(pb + g.step_b[i], pw + g.step_w[i]);
  }
  return g;
}

FiltrationGraph FiltrationGraph::from_vector(const WeightedVector& wv) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < wv.size(); ++i) w.push_back(-wv.weights()[i] * wv.values()[i]);
  return from_steps(wv.weights(), std::move(w));
}

WeightedVector FiltrationGraph::weighted_vector() const {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < step_b.size(); ++i) v.push_back(-step_w[i] / step_b[i]);
  return WeightedVector(step_b, std::move(v));
}

std::vector<Rational> FiltrationGraph::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < step_b.size(); ++i) out.push_back(step_w[i] / step_b[i]);
  return out;
}

EnvelopeResult envelope_maximize(const WeightedVector& wv) {
  const FiltrationGraph g = FiltrationGraph::from_vector(wv);
  const auto& pts = g.points;

  // Upper hull by a monotone stack. A middle point on the chord is dropped,
  // so collinear runs pool into one block.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (hull.size() >= 2) {
      const auto& [x0, y0] = pts[hull[hull.size() - 2]];
      const auto& [x1, y1] = pts[hull.back()];
      const auto& [x2, y2] = pts[i];
      // Keep the middle point only if it lies strictly above the chord.
      const Rational cross = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0);
      if (cross.sign() >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  EnvelopeResult out;
  out.envelope.reserve(pts.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (seg + 1 < hull.size() && hull[seg + 1] < i) ++seg;
    const auto& [xa, ya] = pts[hull[seg]];
    if (i == hull[seg]) {
      out.envelope.emplace_back(xa, ya);
      continue;
    }
    const auto& [xb, yb] = pts[hull[seg + 1]];
    const auto& xi = pts[i].first;
    out.envelope.emplace_back(xi, ya + (yb - ya) * (xi - xa) / (xb - xa));
  }

  Rational norm2;
  for (std::size_t i = 1; i < out.envelope.size(); ++i) {
    const Rational gi = -(out.envelope[i].second - out.envelope[i - 1].second) / wv.weights()[i - 1];
    norm2 += wv.weights()[i - 1] * gi * gi;
    out.gamma.push_back(gi);
  }
  if (!norm2.is_zero()) out.mu = SignedSquare::from_ratio(wv.inner(out.gamma, wv.values()), norm2);
  return out;
}

SignedSquare mu_v(const WeightedVector& wv, const std::vector<Rational>& gamma) {
  return SignedSquare::from_ratio(wv.inner(gamma, wv.values()), wv.inner(gamma, gamma));
}

}  // namespace tensorhn
