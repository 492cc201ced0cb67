#include "tensorhn/stability.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "tensorhn/error.hpp"

namespace tensorhn {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Semistable: return "semistable";
    case Verdict::Unstable: return "unstable";
  }
  return "?";
}

CandidateSet candidate_sections(const Rank2Tensor& tensor) {
  const BinaryForm& form = tensor.form();
  if (form.is_zero()) throw Error(ErrorKind::ZeroTensor, "form vanishes identically");
  const SplitBundle& e = tensor.bundle();
  const int s = tensor.s();

  CandidateSet out;
  out.roots = rational_function_roots(form);
  out.complete = out.roots.multisections.empty();
  bool first_factor_is_root = false;
  for (const auto& r : out.roots.roots) {
    out.candidates.push_back({line_subbundle(e, r.direction.p, r.direction.q), s - r.multiplicity, true});
    if (r.direction.q.is_zero()) first_factor_is_root = true;
    if (r.multiplicity == s) out.nondegenerate = false;
  }

  if (!first_factor_is_root) {
    out.candidates.push_back({line_subbundle(e, Poly(1), Poly()), s, false});
  } else {
    // Finitely many roots: some constant section (k : 1) avoids all of them.
    for (long step = 0;; ++step) {
      const long k = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      const Direction dir{Poly(k), Poly(1)};
      if (form.evaluate(dir).is_zero()) continue;
      out.candidates.push_back({line_subbundle(e, dir.p, dir.q), s, false});
      break;
    }
  }
  return out;
}

bool StabilityReport::verdict_certain() const {
  if (complete || verdict == Verdict::Unstable) return true;
  if (!multisection_bound) return false;
  if (value.sign() < 0) return multisection_bound->sign() < 0;
  return multisection_bound->sign() <= 0;
}

bool StabilityReport::witness_certain() const {
  if (complete) return true;
  return multisection_bound && *multisection_bound < value;
}

StabilityReport stability(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options) {
  if (tau.sign() <= 0) throw Error(ErrorKind::NonpositiveTau, "tau = " + tau.to_string() + " must be positive");
  const CandidateSet set = candidate_sections(tensor);
  const auto& cands = set.candidates;

  // eps via polar iteration is the expensive step; rows are written by index,
  // so the result does not depend on scheduling.
  std::vector<CandidateRow> rows(cands.size());
  auto fill = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < cands.size(); i += step) {
      Candidate c = cands[i];
      c.eps = epsilon_polar(c.sub, tensor);
      rows[i] = {c, destabilizing_value(c.sub.degree, tensor.bundle().degree(), tensor.s(), c.eps, tau)};
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, cands.size()));
  if (jobs == 1) {
    fill(0, 1);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t j = 0; j < jobs; ++j) pending.push_back(std::async(std::launch::async, fill, j, jobs));
    for (auto& f : pending) f.get();
  }

  StabilityReport report;
  report.complete = set.complete;
  report.nondegenerate = set.nondegenerate;
  report.value = rows.front().value;
  for (const auto& row : rows) report.value = std::max(report.value, row.value);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].value == report.value) report.maximizers.push_back(i);
  }
  const int sign = report.value.sign();
  report.verdict = sign > 0 ? Verdict::Unstable : (sign == 0 ? Verdict::Semistable : Verdict::Stable);
  if (sign >= 0) {
    report.witness = rows[report.maximizers.front()].candidate.sub;
    report.witness_eps = rows[report.maximizers.front()].candidate.eps;
  }
  if (!set.complete) {
    // A section hidden in a multisection of multiplicity mu is not (1 : 0), so
    // its degree is at most b and eps = s - mu.
    const SplitBundle& e = tensor.bundle();
    int mu = 0;
    for (const auto& ms : set.roots.multisections) mu = std::max(mu, ms.multiplicity);
    report.multisection_bound = destabilizing_value(e.b, e.degree(), tensor.s(), tensor.s() - mu, tau);
  }
  report.candidates = std::move(rows);
  return report;
}

HnResult hn_analysis(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options) {
  const StabilityReport report = stability(tensor, tau, options);
  if (report.verdict != Verdict::Unstable) {
    throw Error(ErrorKind::NotUnstable, "tensor is " + std::string(to_string(report.verdict)) + " for tau = " +
                                            tau.to_string());
  }
  HnResult out;
  out.sub = *report.witness;
  out.eps = report.witness_eps;
  out.value = report.value;
  const Poly delta(tau);
  out.corrected = corrected_polys(out.sub.degree, tensor.bundle().degree(), tensor.s(), out.eps, delta);
  out.excess = out.corrected.sub.scaled(Rational(2)) - out.corrected.bundle;
  out.tie = report.tie();
  out.certain = report.witness_certain();
  return out;
}

HnResult hn_subsheaf(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options) {
  HnResult out = hn_analysis(tensor, tau, options);
  if (out.tie) throw Error(ErrorKind::TieAnomaly, "several line subbundles attain the maximal value " + out.value.to_string());
  if (!out.certain) {
    throw Error(ErrorKind::IncompleteSearch, "a section outside Q(x) could attain a value >= " + out.value.to_string());
  }
  return out;
}

}  // namespace tensorhn
