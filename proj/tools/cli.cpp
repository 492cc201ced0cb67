#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "selftest.hpp"
#include "tensorhn/covering.hpp"
#include "tensorhn/envelope.hpp"
#include "tensorhn/error.hpp"
#include "tensorhn/kempf.hpp"
#include "tensorhn/stability.hpp"

namespace tensorhn::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchemaHelp = R"(Input formats:
  envelope   {"b": ["1","2","1"], "v": ["-3","0","3"]}   weights b > 0, sum b*v = 0
  tensor     {"bundle": {"a": 0, "b": 0}, "s": 2, "M_degree": 0,
              "coeffs": ["1", "0", "0"], "tau": "1", "fibers": ["0", "1/2"]}
             coeffs lists a_s, ..., a_0 (a_i multiplies X0^i X1^(s-i)), or
             [{"i": 2, "poly": "1"}, ...] with missing entries zero.
             Polynomials use x, integers, a/b literals, + - * ^ and parentheses.
Rationals are strings "p/q" or integers. --tau overrides "tau"; --x overrides "fibers".
)";

struct Options {
  std::string input = "-";
  std::optional<std::string> tau;
  std::optional<std::string> delta;
  std::optional<long> m;
  std::vector<std::string> x;
  bool strict = false;
  unsigned jobs = 1;
  std::string format = "json";
  std::uint64_t seed = 1;
};

struct Outcome {
  json result = json::object();
  std::vector<std::string> warnings;
  bool anomaly = false;
  bool failed = false;
};

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_input(const Options& opts, std::istream& in) {
  if (opts.input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(opts.input, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open input file " + opts.input);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational to_rational(const json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorKind::ParseError, what + " must be a rational string");
}

int to_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, what + " must be an integer");
  return j.get<int>();
}

std::vector<Rational> rational_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(to_rational(e, what));
  return out;
}

Poly to_poly(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (j.is_number_integer()) return Poly(Rational(j.get<long long>()));
  throw Error(ErrorKind::ParseError, "polynomial entries must be strings");
}

Rank2Tensor parse_tensor(const json& j) {
  RawTensor raw;
  const json& bundle = field(j, "bundle");
  raw.bundle = {to_int(field(bundle, "a"), "bundle.a"), to_int(field(bundle, "b"), "bundle.b")};
  raw.s = to_int(field(j, "s"), "s");
  raw.m_degree = to_int(field(j, "M_degree"), "M_degree");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw Error(ErrorKind::ParseError, "coeffs must be an array");
  if (raw.s < 1) throw Error(ErrorKind::InvalidParameters, "s must be at least 1");
  const auto size = static_cast<std::size_t>(raw.s) + 1;
  raw.coeffs.assign(size, Poly());
  if (!coeffs.empty() && coeffs.front().is_object()) {
    std::vector<bool> seen(size, false);
    for (const auto& e : coeffs) {
      const int i = to_int(field(e, "i"), "coeffs[].i");
      if (i < 0 || i > raw.s) throw Error(ErrorKind::ParseError, "coeffs index out of range");
      if (seen[static_cast<std::size_t>(i)]) throw Error(ErrorKind::ParseError, "duplicate coeffs index");
      seen[static_cast<std::size_t>(i)] = true;
      raw.coeffs[static_cast<std::size_t>(i)] = to_poly(field(e, "poly"));
    }
  } else {
    if (coeffs.size() != size) throw Error(ErrorKind::ParseError, "coeffs must list s+1 polynomials");
    for (std::size_t k = 0; k < size; ++k) raw.coeffs[size - 1 - k] = to_poly(coeffs[k]);
  }
  return validate_tensor(raw);
}

Rational resolve_tau(const Options& opts, const json& j) {
  if (opts.tau) return Rational::parse(*opts.tau);
  if (j.is_object() && j.contains("tau")) return to_rational(j.at("tau"), "tau");
  throw Error(ErrorKind::ParseError, "tau is required (--tau or \"tau\" field)");
}

std::vector<Rational> resolve_fibers(const Options& opts, const json& j) {
  std::vector<Rational> out;
  if (!opts.x.empty()) {
    for (const auto& s : opts.x) out.push_back(Rational::parse(s));
  } else if (j.is_object() && j.contains("fibers")) {
    out = rational_list(j.at("fibers"), "fibers");
  }
  return out;
}

json tensor_json(const Rank2Tensor& t) {
  json coeffs = json::array();
  for (int i = t.s(); i >= 0; --i) {
    if (!t.form().coeff(i).is_zero()) coeffs.push_back({{"i", i}, {"poly", t.form().coeff(i).to_string()}});
  }
  return {{"bundle", {{"a", t.bundle().a}, {"b", t.bundle().b}}},
          {"s", t.s()},
          {"M_degree", t.m_degree()},
          {"coeffs", coeffs},
          {"swapped", t.swapped()}};
}

json sub_json(const LineSubbundle& sub) {
  return {{"p", sub.section.p.to_string()}, {"q", sub.section.q.to_string()}, {"degree", sub.degree}};
}

json square_json(const SignedSquare& x) { return {{"sign", x.sign}, {"square", x.square.to_string()}}; }

json optional_rational(const std::optional<Rational>& r) { return r ? json(r->to_string()) : json(nullptr); }

// --- commands -------------------------------------------------------------

Outcome cmd_envelope(const json& j) {
  const WeightedVector wv(rational_list(field(j, "b"), "b"), rational_list(field(j, "v"), "v"));
  const auto res = envelope_maximize(wv);
  Outcome out;
  json gamma = json::array();
  for (const auto& g : res.gamma) gamma.push_back(g.to_string());
  json env = json::array();
  for (const auto& [b, w] : res.envelope) env.push_back({b.to_string(), w.to_string()});
  out.result = {{"gamma", gamma}, {"mu_squared", res.mu.square.to_string()}, {"sign", res.mu.sign}, {"envelope", env}};
  return out;
}

void stability_warnings(const StabilityReport& rep, Outcome& out) {
  if (!rep.complete) out.warnings.push_back("incomplete: the form has factors without roots in Q(x)");
  if (!rep.verdict_certain()) {
    out.warnings.push_back("IncompleteSearch: verdict could change by sections outside Q(x)");
    out.anomaly = true;
  }
  if (rep.verdict == Verdict::Unstable) {
    if (rep.tie()) {
      out.warnings.push_back("TieAnomaly: several subbundles attain the maximal value");
      out.anomaly = true;
    } else if (!rep.witness_certain()) {
      out.warnings.push_back("IncompleteSearch: witness could be tied by sections outside Q(x)");
      out.anomaly = true;
    }
  }
}

json stability_json(const Rank2Tensor& t, const StabilityReport& rep, const Rational& tau) {
  json cands = json::array();
  for (std::size_t k = 0; k < rep.candidates.size(); ++k) {
    const auto& row = rep.candidates[k];
    json c = sub_json(row.candidate.sub);
    c["eps"] = row.candidate.eps;
    c["root"] = row.candidate.root;
    c["value"] = row.value.to_string();
    c["maximizer"] = std::find(rep.maximizers.begin(), rep.maximizers.end(), k) != rep.maximizers.end();
    cands.push_back(c);
  }
  json witness = nullptr;
  if (rep.witness) {
    witness = sub_json(*rep.witness);
    witness["eps"] = rep.witness_eps;
  }
  return {{"verdict", to_string(rep.verdict)},
          {"value", rep.value.to_string()},
          {"tau", tau.to_string()},
          {"witness", witness},
          {"candidates", cands},
          {"complete", rep.complete},
          {"nondegenerate", rep.nondegenerate},
          {"multisection_bound", optional_rational(rep.multisection_bound)},
          {"tie", rep.tie()},
          {"verdict_certain", rep.verdict_certain()},
          {"witness_certain", rep.witness_certain()},
          {"tensor", tensor_json(t)}};
}

Outcome cmd_stability(const json& j, const Options& opts) {
  const auto t = parse_tensor(j);
  const Rational tau = resolve_tau(opts, j);
  const auto rep = stability(t, tau, {opts.jobs});
  Outcome out;
  out.result = stability_json(t, rep, tau);
  stability_warnings(rep, out);
  return out;
}

Outcome cmd_hn(const json& j, const Options& opts) {
  const auto t = parse_tensor(j);
  const Rational tau = resolve_tau(opts, j);
  const auto rep = stability(t, tau, {opts.jobs});
  Outcome out;
  out.result = {{"verdict", to_string(rep.verdict)}, {"tau", tau.to_string()}, {"subsheaf", nullptr}};
  if (rep.verdict != Verdict::Unstable) return out;
  const HnResult hn = opts.strict ? hn_subsheaf(t, tau, {opts.jobs}) : hn_analysis(t, tau, {opts.jobs});
  out.result["subsheaf"] = sub_json(hn.sub);
  out.result["eps"] = hn.eps;
  out.result["value"] = hn.value.to_string();
  out.result["corrected"] = {{"bundle", hn.corrected.bundle.to_string('m')},
                             {"sub", hn.corrected.sub.to_string('m')},
                             {"quotient", hn.corrected.quotient.to_string('m')}};
  out.result["excess"] = hn.excess.to_string('m');
  out.result["tie"] = hn.tie;
  out.result["certain"] = hn.certain;
  if (hn.tie) out.warnings.push_back("TieAnomaly: several subbundles attain the maximal value");
  if (!hn.certain) out.warnings.push_back("IncompleteSearch: witness could be tied by sections outside Q(x)");
  return out;
}

json fiber_json(const FiberClassification& f) {
  return {{"x", f.x0.to_string()}, {"s", f.s}, {"max_multiplicity", f.max_multiplicity}, {"unstable", f.unstable}};
}

Outcome cmd_covering(const json& j, const Options& opts) {
  const auto t = parse_tensor(j);
  const Rational tau = resolve_tau(opts, j);
  const auto rep = covering_stability(t, tau, resolve_fibers(opts, j), {opts.jobs});
  Outcome out;
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r = sub_json(row.divisor.sub);
    r["deg_sigma"] = row.divisor.deg_sigma;
    r["c0_dot_d"] = row.divisor.c0_dot_d;
    r["branches"] = row.divisor.branches;
    r["eps"] = row.eps;
    r["intersection_value"] = row.intersection_value.to_string();
    r["bundle_value"] = row.bundle_value.to_string();
    rows.push_back(r);
  }
  json fibers = json::array();
  for (const auto& f : rep.fibers) fibers.push_back(fiber_json(f));
  json section = nullptr;
  if (rep.hn_section) {
    section = sub_json(rep.hn_section->sub);
    section["c0_dot_d"] = rep.hn_section->c0_dot_d;
    section["branches"] = rep.hn_section->branches;
  }
  out.result = {{"verdict", to_string(rep.verdict)},
                {"value", rep.value.to_string()},
                {"tau", tau.to_string()},
                {"e", rep.e},
                {"twist", rep.twist},
                {"hn_section", section},
                {"rows", rows},
                {"fibers", fibers},
                {"complete", rep.complete},
                {"tie", rep.tie}};
  if (!rep.complete) {
    out.warnings.push_back("incomplete: the form has factors without roots in Q(x)");
    out.anomaly = true;
  }
  if (rep.tie && rep.verdict == Verdict::Unstable) {
    out.warnings.push_back("TieAnomaly: several sections attain the maximal value");
    out.anomaly = true;
  }
  return out;
}

Outcome cmd_fiber(const json& j, const Options& opts) {
  const auto t = parse_tensor(j);
  const auto xs = resolve_fibers(opts, j);
  if (xs.empty()) throw Error(ErrorKind::ParseError, "fiber needs --x or a \"fibers\" field");
  std::optional<LineSubbundle> witness;
  if (opts.tau || (j.is_object() && j.contains("tau"))) {
    const auto rep = stability(t, resolve_tau(opts, j), {opts.jobs});
    if (rep.verdict == Verdict::Unstable) witness = rep.witness;
  }
  Outcome out;
  json fibers = json::array();
  for (const auto& x0 : xs) {
    json f = fiber_json(fiber_point_stability(t, x0));
    if (witness) f["witness_multiplicity"] = fiber_multiplicity_at(t, x0, witness->section);
    fibers.push_back(f);
  }
  out.result = {{"fibers", fibers}, {"witness", witness ? sub_json(*witness) : json(nullptr)}};
  return out;
}

Outcome cmd_kempf(const json& j, const Options& opts) {
  const auto t = parse_tensor(j);
  if (!opts.m) throw Error(ErrorKind::ParseError, "kempf needs --m");
  const long m = *opts.m;
  Poly delta;
  if (opts.delta) {
    delta = parse_poly(*opts.delta, "mx");
  } else {
    delta = Poly(resolve_tau(opts, j));
  }
  const int s = t.s();
  const int deg_e = t.bundle().degree();
  KempfParameters params{2, s, delta, hilbert_polynomial(2, deg_e), 1};
  params.validate();
  const Rational mm(m);
  const Rational ratio = params.ratio(mm);
  const Rational p_e = params.hilbert.eval(mm);
  const Rational m_cubed = mm * mm * mm;  // m^(n+2), n = 1

  Outcome out;
  json rows = json::array();
  bool all_proportional = true;
  std::optional<Rational> best;
  std::vector<std::size_t> best_rows;
  const auto cands = candidate_sections(t);
  for (std::size_t k = 0; k < cands.candidates.size(); ++k) {
    const auto& c = cands.candidates[k];
    const Poly kpoly = K_polynomial(c.sub.degree, deg_e, s, c.eps, delta);
    const Rational k_m = kpoly.eval(mm);
    const SignedSquare closed = one_step_closed_form(k_m, params, mm);
    json row = sub_json(c.sub);
    row["eps"] = c.eps;
    row["K"] = kpoly.to_string('m');
    row["K_at_m"] = k_m.to_string();
    row["closed_form"] = square_json(closed);
    const Rational p_l = hilbert_polynomial(1, c.sub.degree).eval(mm);
    if (p_l.sign() > 0 && (p_e - p_l).sign() > 0) {
      const Integer dims[] = {p_l.numerator(), (p_e - p_l).numerator()};
      const int rank_steps[] = {1, 1};
      const int eps_steps[] = {c.eps, s - c.eps};
      const auto data = FiltrationData::from_steps(dims, rank_steps, eps_steps);
      const Rational n1[] = {Rational(1)};
      const SignedSquare kempf = kempf_function(data, n1, params, m);
      const auto graph = build_graph(data, params, m);
      const auto slopes = graph.slopes();
      // A flat graph has v = 0: no direction destabilizes.
      const SignedSquare env = std::all_of(slopes.begin(), slopes.end(), [](const Rational& x) { return x.is_zero(); })
                                   ? SignedSquare{}
                                   : envelope_maximize(graph.weighted_vector()).mu;
      const Rational norm_ratio = one_step_norm_ratio(p_l, p_e - p_l);
      // Trace-zero Kempf value = closed form times sqrt(norm_ratio); the
      // envelope sees only the destabilizing part, sign 0 when K <= 0.
      const bool proportional = kempf == SignedSquare{closed.sign, closed.square * norm_ratio} &&
                                (kempf.sign > 0 ? env == SignedSquare{1, kempf.square * m_cubed} : env.sign == 0);
      row["kempf"] = square_json(kempf);
      row["envelope"] = square_json(env);
      row["norm_ratio"] = norm_ratio.to_string();
      row["proportional"] = proportional;
      all_proportional = all_proportional && proportional;
    } else {
      row["kempf"] = nullptr;
      row["envelope"] = nullptr;
      row["norm_ratio"] = nullptr;
      row["proportional"] = nullptr;
      out.warnings.push_back("m too small for the filtration of candidate " + std::to_string(k));
    }
    if (!best || k_m > *best) {
      best = k_m;
      best_rows = {k};
    } else if (k_m == *best) {
      best_rows.push_back(k);
    }
    rows.push_back(row);
  }
  json witness = nullptr;
  if (best && best->sign() > 0) {
    witness = rows[best_rows.front()];
    if (best_rows.size() > 1) {
      out.warnings.push_back("TieAnomaly: several subbundles attain the maximal K(m)");
      out.anomaly = true;
    }
  }
  if (!cands.complete) {
    out.warnings.push_back("incomplete: the form has factors without roots in Q(x)");
    out.anomaly = true;
  }
  out.result = {{"m", std::to_string(m)},
                {"delta", delta.to_string('m')},
                {"hilbert", params.hilbert.to_string('m')},
                {"ratio", ratio.to_string()},
                {"max_K_at_m", best ? json(best->to_string()) : json(nullptr)},
                {"witness", witness},
                {"candidates", rows},
                {"proportional", all_proportional},
                {"complete", cands.complete}};
  return out;
}

// --- output ---------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::map<std::string, std::string>& cells) {
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) flatten(e, prefix.empty() ? k : prefix + "." + k, cells);
  } else if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) joined += (joined.empty() ? "" : " ") + scalar_text(e.is_array() ? json(e.dump()) : e);
    cells[prefix] = "[" + joined + "]";
  } else {
    cells[prefix] = scalar_text(v);
  }
}

void print_table(const json& rows, std::ostream& os) {
  std::vector<std::map<std::string, std::string>> flat;
  std::vector<std::string> columns;
  for (const auto& r : rows) {
    flat.emplace_back();
    flatten(r, "", flat.back());
    for (const auto& [k, _] : flat.back()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::vector<std::size_t> width;
  for (const auto& c : columns) {
    std::size_t w = c.size();
    for (const auto& f : flat) {
      const auto it = f.find(c);
      if (it != f.end()) w = std::max(w, it->second.size());
    }
    width.push_back(w);
  }
  auto line = [&](auto cell) {
    std::string text;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string v = cell(i);
      v.resize(width[i], ' ');
      text += (i ? "  " : "  ") + v;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& f : flat) {
    line([&](std::size_t i) {
      const auto it = f.find(columns[i]);
      return it == f.end() ? std::string("-") : it->second;
    });
  }
}

void print_report_table(const json& report, std::ostream& os) {
  os << "command: " << report["command"].get<std::string>() << '\n';
  os << "input_digest: " << report["input_digest"].get<std::string>() << '\n';
  std::vector<std::string> tables;
  for (const auto& [k, v] : report["result"].items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      tables.push_back(k);
      continue;
    }
    std::map<std::string, std::string> cells;
    flatten(v, k, cells);
    for (const auto& [name, text] : cells) os << name << ": " << text << '\n';
  }
  for (const auto& k : tables) {
    os << '\n' << k << ":\n";
    print_table(report["result"][k], os);
  }
  for (const auto& w : report["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact destabilization data for rank-2 tensors over P^1", "tensorhn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opts.input, "input file, or - for stdin");
  app.add_option("--tau", opts.tau, "stability parameter tau > 0, as p/q");
  app.add_option("--delta", opts.delta, "polynomial delta(m) for the kempf command");
  app.add_option("--m", opts.m, "integer m for the kempf command");
  app.add_option("--x", opts.x, "fiber coordinate (repeatable)");
  app.add_flag("--strict", opts.strict, "exit 3 on ties or incomplete searches");
  app.add_option("--jobs", opts.jobs, "worker threads for candidate evaluation")->check(CLI::PositiveNumber);
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.footer(kSchemaHelp);
  const char* names[][2] = {
      {"envelope", "envelope maximizer of a weighted vector"},
      {"stability", "tau-stability verdict and candidate table"},
      {"hn", "Harder-Narasimhan subsheaf of an unstable tensor"},
      {"covering", "stability of the induced covering in the ruled surface"},
      {"fiber", "point-configuration stability on fibers"},
      {"kempf", "Kempf function against the closed form K(m)"},
      {"selftest", "run the embedded oracle suites"},
  };
  for (const auto& [name, desc] : names) {
    auto* sub = app.add_subcommand(name, desc);
    if (std::string(name) == "selftest") sub->add_option("--seed", opts.seed, "random seed");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::string bytes;
    Outcome outcome;
    if (command == "selftest") {
      outcome.result = run_selftest(opts.seed);
      outcome.failed = !outcome.result["passed"].get<bool>();
    } else {
      bytes = read_input(opts, in);
      const json input = json::parse(bytes);
      if (command == "envelope") outcome = cmd_envelope(input);
      else if (command == "stability") outcome = cmd_stability(input, opts);
      else if (command == "hn") outcome = cmd_hn(input, opts);
      else if (command == "covering") outcome = cmd_covering(input, opts);
      else if (command == "fiber") outcome = cmd_fiber(input, opts);
      else outcome = cmd_kempf(input, opts);
    }
    const json report = {{"command", command},
                         {"input_digest", digest(bytes)},
                         {"result", outcome.result},
                         {"warnings", outcome.warnings}};
    if (opts.format == "table") {
      print_report_table(report, out);
    } else {
      out << report.dump(2) << '\n';
    }
    if (outcome.failed) return kSelftestFailed;
    if (opts.strict && outcome.anomaly) return kStrictAnomaly;
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::TieAnomaly || e.kind() == ErrorKind::IncompleteSearch) return kStrictAnomaly;
    if (e.kind() == ErrorKind::ParseError) err << '\n' << kSchemaHelp;
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n\n" << kSchemaHelp;
    return kInputError;
  }
}

}  // namespace tensorhn::cli
