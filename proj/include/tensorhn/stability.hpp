#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tensorhn/binary_form.hpp"
#include "tensorhn/tensor.hpp"

namespace tensorhn {

enum class Verdict { Stable, Semistable, Unstable };

std::string_view to_string(Verdict v);

struct Candidate {
  LineSubbundle sub;
  int eps = 0;
  bool root = false;  // direction is a zero of the form
};

/// Line subbundles that can realize the maximum of the destabilizing value.
///
/// Any L with eps(L) < s is a zero of the form over the function field, so
/// the root sections cover that range. Among eps = s subbundles the value is
/// 2c - deg E - tau s, maximized by the largest available degree: a via the
/// first factor (1, 0) unless that is a root, b otherwise (degree > b forces
/// q = 0). Roots outside Q(x) live in the multisection factors; when present
/// the set is not complete.
struct CandidateSet {
  std::vector<Candidate> candidates;
  FormRoots roots;
  bool complete = true;
  /// False when the form is a perfect s-th power of a linear form.
  bool nondegenerate = true;
};

CandidateSet candidate_sections(const Rank2Tensor& tensor);

struct CandidateRow {
  Candidate candidate;
  Rational value;
};

struct StabilityReport {
  Verdict verdict = Verdict::Stable;
  std::optional<LineSubbundle> witness;
  int witness_eps = 0;
  Rational value;  // max over candidates
  std::vector<CandidateRow> candidates;
  std::vector<std::size_t> maximizers;  // indices into candidates
  bool complete = true;
  bool nondegenerate = true;
  /// Upper bound on the value of any section hidden in a multisection factor.
  std::optional<Rational> multisection_bound;

  bool tie() const { return maximizers.size() > 1; }
  /// The verdict cannot change by sections outside Q(x).
  bool verdict_certain() const;
  /// The witness cannot be beaten or tied by sections outside Q(x).
  bool witness_certain() const;
};

struct StabilityOptions {
  unsigned jobs = 1;
};

StabilityReport stability(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options = {});

struct HnResult {
  LineSubbundle sub;
  int eps = 0;
  Rational value;
  CorrectedPolys corrected;
  /// 2 Pbar_L - Pbar_E, a positive constant for an unstable curve tensor.
  Poly excess;
  bool tie = false;
  bool certain = true;
};

/// Harder-Narasimhan data without raising on anomalies; NotUnstable if the
/// tensor is not tau-unstable.
HnResult hn_analysis(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options = {});

/// As hn_analysis, but TieAnomaly / IncompleteSearch are raised.
HnResult hn_subsheaf(const Rank2Tensor& tensor, const Rational& tau, const StabilityOptions& options = {});

}  // namespace tensorhn
