#include "tensorhn/kempf.hpp"

#include <algorithm>
#include <tuple>

#include "tensorhn/error.hpp"

namespace tensorhn {

namespace {

// gamma_{r_i} = sum_j n_j (r_j - r [r_i <= r_j]).
Rational gamma_at_rank(int rank, std::span<const int> ranks, std::span<const Rational> n, int r) {
  Rational acc;
  for (std::size_t j = 0; j < n.size(); ++j) {
    acc += n[j] * Rational(ranks[j] - (rank <= ranks[j] ? r : 0));
  }
  return acc;
}

}  // namespace

MultiIndexEpsilon epsilon_from_oracle(int t, std::span<const int> ranks, int s, const MultiIndexPredicate& nonzero,
                                      const std::optional<std::vector<Rational>>& weights) {
  if (t < 0 || s < 1 || ranks.size() != static_cast<std::size_t>(t + 1)) {
    throw Error(ErrorKind::InvalidParameters, "need t >= 0, s >= 1 and t+1 ranks");
  }
  if (!std::is_sorted(ranks.begin(), ranks.end()) || ranks.front() < 1) {
    throw Error(ErrorKind::InvalidParameters, "ranks must be positive and nondecreasing");
  }
  if (weights && weights->size() != static_cast<std::size_t>(t)) {
    throw Error(ErrorKind::InvalidWeights, "need exactly t weights");
  }
  if (weights) {
    for (const auto& w : *weights) {
      if (w.sign() <= 0) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
    }
  }
  const std::vector<int> top(static_cast<std::size_t>(s), t + 1);
  if (!nonzero(top)) throw Error(ErrorKind::DegenerateTensor, "tensor vanishes on E x ... x E");

  const int r = ranks.back();
  std::vector<Rational> gamma(static_cast<std::size_t>(t + 1));
  if (weights) {
    for (int i = 0; i <= t; ++i) gamma[static_cast<std::size_t>(i)] = gamma_at_rank(ranks[static_cast<std::size_t>(i)], ranks, *weights, r);
  }

  std::vector<int> idx(static_cast<std::size_t>(s), 1);
  std::vector<int> best;
  std::vector<int> best_ranks;
  Rational best_value;
  for (;;) {
    if (nonzero(idx)) {
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> rk;
      for (int i : sorted) rk.push_back(ranks[static_cast<std::size_t>(i - 1)]);
      Rational value;
      if (weights) {
        for (int i : sorted) value += gamma[static_cast<std::size_t>(i - 1)];
      }
      bool better = best.empty();
      if (!better) {
        if (weights && value != best_value) {
          better = value < best_value;
        } else {
          better = std::tie(rk, sorted) < std::tie(best_ranks, best);
        }
      }
      if (better) {
        best = sorted;
        best_ranks = rk;
        best_value = value;
      }
    }
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == t + 1) {
      idx[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }

  MultiIndexEpsilon out;
  out.i0 = best;
  int prev = 0;
  for (int i = 0; i <= t; ++i) {
    const int ri = ranks[static_cast<std::size_t>(i)];
    const int count = static_cast<int>(std::count_if(best_ranks.begin(), best_ranks.end(), [&](int rk) { return rk <= ri; }));
    out.eps.push_back(count);
    out.eps_step.push_back(count - prev);
    prev = count;
  }
  return out;
}

Rational mu_closed_form(std::span<const Rational> n, std::span<const int> ranks, std::span<const int> eps, int s,
                        int r) {
  if (ranks.size() < n.size() || eps.size() < n.size()) {
    throw Error(ErrorKind::InvalidParameters, "ranks and eps must cover every weight");
  }
  Rational acc;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].sign() <= 0) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
    acc += n[i] * Rational(s * ranks[i] - eps[i] * r);
  }
  return acc;
}

void KempfParameters::validate() const {
  if (r < 1 || s < 1 || dim_x < 1) throw Error(ErrorKind::InvalidParameters, "r, s and dim X must be positive");
  if (delta.is_zero() || delta.lead().sign() <= 0) {
    throw Error(ErrorKind::InvalidDelta, "delta must have positive leading coefficient");
  }
}

Rational KempfParameters::ratio(const Rational& m) const {
  validate();
  const Rational d = delta.eval(m);
  const Rational denom = hilbert.eval(m) - Rational(s) * d;
  if (denom.sign() <= 0) {
    throw Error(ErrorKind::InvalidParameters, "P_E(m) - s delta(m) = " + denom.to_string() + " is not positive");
  }
  return Rational(r) * d / denom;
}

FiltrationData FiltrationData::from_steps(std::span<const Integer> dim_steps, std::span<const int> rank_steps,
                                          std::span<const int> eps_steps) {
  if (dim_steps.empty() || dim_steps.size() != rank_steps.size() || dim_steps.size() != eps_steps.size()) {
    throw Error(ErrorKind::InvalidParameters, "filtration step lists must have equal positive length");
  }
  FiltrationData out;
  Integer d = 0;
  int rk = 0;
  int e = 0;
  for (std::size_t i = 0; i < dim_steps.size(); ++i) {
    d += dim_steps[i];
    rk += rank_steps[i];
    e += eps_steps[i];
    out.dims.push_back(d);
    out.ranks.push_back(rk);
    out.eps.push_back(e);
  }
  return out;
}

Integer FiltrationData::dim_step(int i) const {
  const auto k = static_cast<std::size_t>(i - 1);
  return k == 0 ? dims[0] : Integer(dims[k] - dims[k - 1]);
}

int FiltrationData::rank_step(int i) const {
  const auto k = static_cast<std::size_t>(i - 1);
  return k == 0 ? ranks[0] : ranks[k] - ranks[k - 1];
}

int FiltrationData::eps_step(int i) const {
  const auto k = static_cast<std::size_t>(i - 1);
  return k == 0 ? eps[0] : eps[k] - eps[k - 1];
}

FiltrationGraph build_graph(const FiltrationData& data, const KempfParameters& params, long m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameters, "m must be positive");
  const Rational ratio = params.ratio(Rational(m));
  const int len = data.length();
  if (len < 1 || data.ranks.back() != params.r || data.eps.back() != params.s) {
    throw Error(ErrorKind::InvalidParameters, "filtration must end at rank r with eps = s");
  }
  const Rational dim_v(data.dims.back());
  const Rational m_pow = pow(Rational(m), static_cast<unsigned>(params.dim_x));
  std::vector<Rational> bs;
  std::vector<Rational> ws;
  for (int i = 1; i <= len; ++i) {
    const Rational dv(data.dim_step(i));
    if (dv.sign() <= 0) throw Error(ErrorKind::InvalidParameters, "dim V^" + std::to_string(i) + " must be positive");
    bs.push_back(dv / m_pow);
    const Rational bracket = Rational(params.r) * dv - Rational(data.rank_step(i)) * dim_v +
                             ratio * (Rational(params.s) * dv - Rational(data.eps_step(i)) * dim_v);
    ws.push_back(Rational(m) / dim_v * bracket);
  }
  return FiltrationGraph::from_steps(std::move(bs), std::move(ws));
}

std::vector<Rational> gamma_from_weights(const FiltrationData& data, std::span<const Rational> n) {
  const int len = data.length();
  if (n.size() != static_cast<std::size_t>(len - 1)) throw Error(ErrorKind::InvalidWeights, "need t weights");
  const Rational dim_v(data.dims.back());
  std::vector<Rational> gamma(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].sign() <= 0) throw Error(ErrorKind::InvalidWeights, "weight n_" + std::to_string(i + 1) + " is not positive");
    gamma[i + 1] = gamma[i] + n[i] * dim_v;
  }
  Rational weighted;
  for (int i = 1; i <= len; ++i) weighted += Rational(data.dim_step(i)) * gamma[static_cast<std::size_t>(i - 1)];
  const Rational shift = weighted / dim_v;
  for (auto& g : gamma) g -= shift;
  return gamma;
}

SignedSquare kempf_function(const FiltrationData& data, std::span<const Rational> n, const KempfParameters& params,
                            long m) {
  const int len = data.length();
  if (len < 1) throw Error(ErrorKind::InvalidParameters, "empty filtration");
  const auto gamma = gamma_from_weights(data, n);
  if (len == 1) return {};
  const Rational ratio = params.ratio(Rational(m));
  const Rational dim_v(data.dims.back());
  Rational numerator;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Rational dvi(data.dims[i]);
    numerator += n[i] * (Rational(params.r) * dvi - Rational(data.ranks[i]) * dim_v +
                         ratio * (Rational(params.s) * dvi - Rational(data.eps[i]) * dim_v));
  }
  Rational norm2;
  for (int i = 1; i <= len; ++i) {
    const Rational& g = gamma[static_cast<std::size_t>(i - 1)];
    norm2 += Rational(data.dim_step(i)) * g * g;
  }
  return SignedSquare::from_ratio(numerator, norm2);
}

SignedSquare one_step_closed_form(const Rational& k_value, const KempfParameters& params, const Rational& m) {
  params.validate();
  const Rational p = params.hilbert.eval(m);
  const Rational denom = p - Rational(params.s) * params.delta.eval(m);
  if (p.sign() <= 0 || denom.sign() <= 0) {
    throw Error(ErrorKind::InvalidParameters, "P(m) and P(m) - s delta(m) must be positive");
  }
  const Rational r(params.r);
  return {k_value.sign(), r * r * k_value * k_value / (p * denom * denom)};
}

Rational one_step_norm_ratio(const Rational& p1, const Rational& p2) {
  if (p1.sign() <= 0 || p2.sign() <= 0) throw Error(ErrorKind::InvalidParameters, "dimensions must be positive");
  const Rational total = p1 + p2;
  return total * total / (Rational(4) * p1 * p2);
}

}  // namespace tensorhn
