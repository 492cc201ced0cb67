#include "tensorhn/binary_form.hpp"

#include <algorithm>
#include <utility>

#include "tensorhn/error.hpp"
#include "tensorhn/factor.hpp"

namespace tensorhn {

namespace {

// Polynomials in t with Q[x] coefficients, index = t-degree, no trailing zeros.
using TPoly = std::vector<Poly>;

void tp_trim(TPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int tp_deg(const TPoly& a) { return static_cast<int>(a.size()) - 1; }

Poly tp_content(const TPoly& a) {
  Poly g;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  Poly q;
  if (!divides_exactly(a, b, &q)) throw Error(ErrorKind::InvalidParameters, "inexact Q[x] division");
  return q;
}

// Primitive part, scaled so the leading coefficient is monic in x.
TPoly tp_normalized_pp(TPoly a) {
  tp_trim(a);
  if (a.empty()) return a;
  const Poly g = tp_content(a);
  for (auto& c : a) c = exact_quotient(c, g);
  const Rational k = a.back().lead().inverse();
  for (auto& c : a) c = c.scaled(k);
  return a;
}

TPoly tp_derivative(const TPoly& a) {
  TPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i].scaled(Rational(static_cast<long>(i))));
  tp_trim(d);
  return d;
}

TPoly tp_sub(TPoly a, const TPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  tp_trim(a);
  return a;
}

TPoly tp_prem(TPoly r, const TPoly& b) {
  const Poly& lc = b.back();
  int e = tp_deg(r) - tp_deg(b) + 1;
  while (!r.empty() && tp_deg(r) >= tp_deg(b)) {
    const Poly lr = r.back();
    const std::size_t shift = static_cast<std::size_t>(tp_deg(r) - tp_deg(b));
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
    tp_trim(r);
    --e;
  }
  if (e > 0) {
    const Poly k = pow(lc, static_cast<unsigned>(e));
    for (auto& c : r) c *= k;
  }
  return r;
}

TPoly tp_gcd(const TPoly& a, const TPoly& b) {
  TPoly u = tp_normalized_pp(a);
  TPoly v = tp_normalized_pp(b);
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (tp_deg(u) < tp_deg(v)) std::swap(u, v);
  while (!v.empty() && tp_deg(v) > 0) {
    TPoly r = tp_normalized_pp(tp_prem(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  if (!v.empty()) return TPoly{Poly(1)};  // a nonzero t-constant: coprime
  return u;
}

TPoly tp_exact_div(TPoly a, const TPoly& b) {
  tp_trim(a);
  if (a.empty()) return a;
  const int db = tp_deg(b);
  TPoly q(static_cast<std::size_t>(std::max(0, tp_deg(a) - db + 1)));
  while (!a.empty() && tp_deg(a) >= db) {
    const std::size_t shift = static_cast<std::size_t>(tp_deg(a) - db);
    const Poly k = exact_quotient(a.back(), b.back());
    q[shift] = k;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= k * b[j];
    tp_trim(a);
  }
  if (!a.empty()) throw Error(ErrorKind::InvalidParameters, "inexact Q[x][t] division");
  tp_trim(q);
  return q;
}

// Yun's algorithm over Q(x)[t] with primitive Q[x][t] representatives.
std::vector<std::pair<TPoly, int>> tp_squarefree(const TPoly& f0) {
  std::vector<std::pair<TPoly, int>> out;
  const TPoly f = tp_normalized_pp(f0);
  if (tp_deg(f) <= 0) return out;
  const TPoly df = tp_derivative(f);
  const TPoly a0 = tp_gcd(f, df);
  TPoly b = tp_exact_div(f, a0);
  TPoly c = tp_exact_div(df, a0);
  TPoly d = tp_sub(c, tp_derivative(b));
  for (int i = 1; tp_deg(b) > 0; ++i) {
    const TPoly a = tp_gcd(b, d);
    if (tp_deg(a) > 0) out.emplace_back(a, i);
    b = tp_exact_div(b, a);
    c = tp_exact_div(d, a);
    d = tp_sub(c, tp_derivative(b));
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t k = ca.size(); k-- > 0;) {
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  }
  return false;
}

bool direction_less(const Direction& a, const Direction& b) {
  const bool a_inf = a.q.is_zero();
  const bool b_inf = b.q.is_zero();
  if (a_inf != b_inf) return b_inf;
  if (a.q != b.q) return poly_less(a.q, b.q);
  return poly_less(a.p, b.p);
}

BinaryForm form_product(const BinaryForm& f, const BinaryForm& g) {
  std::vector<Poly> c(static_cast<std::size_t>(f.s() + g.s() + 1));
  for (int i = 0; i <= f.s(); ++i) {
    for (int j = 0; j <= g.s(); ++j) c[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
  }
  return BinaryForm(std::move(c));
}

}  // namespace

Direction normalize_direction(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::ZeroDirection, "direction (0, 0)");
  if (q.is_zero()) return {Poly(1), Poly()};
  if (p.is_zero()) return {Poly(), Poly(1)};
  const Poly g = gcd(p, q);
  Poly pr = divmod(p, g).quotient;
  Poly qr = divmod(q, g).quotient;
  const Rational k = qr.lead().inverse();
  return {pr.scaled(k), qr.scaled(k)};
}

BinaryForm::BinaryForm(std::vector<Poly> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) throw Error(ErrorKind::InvalidParameters, "binary form needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly BinaryForm::evaluate(const Direction& v) const {
  // Homogeneous Horner in X0 = p, X1 = q.
  Poly acc;
  Poly q_pow(1);
  std::vector<Poly> q_powers(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) {
    q_powers[k] = q_pow;
    q_pow *= v.q;
  }
  Poly p_pow(1);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].is_zero()) acc += a_[i] * p_pow * q_powers[a_.size() - 1 - i];
    p_pow *= v.p;
  }
  return acc;
}

std::vector<Rational> BinaryForm::fiber(const Rational& x0) const {
  std::vector<Rational> out;
  out.reserve(a_.size());
  for (const auto& c : a_) out.push_back(c.eval(x0));
  return out;
}

BinaryForm polar_derivative(const BinaryForm& f, const Direction& v) {
  if (f.s() < 1) throw Error(ErrorKind::DegreeZero, "polar derivative of a degree-0 form");
  if (v.p.is_zero() && v.q.is_zero()) throw Error(ErrorKind::ZeroDirection, "direction (0, 0)");
  const int s = f.s();
  std::vector<Poly> out(static_cast<std::size_t>(s));
  for (int i = 0; i <= s; ++i) {
    const Poly& a = f.coeff(i);
    if (a.is_zero()) continue;
    if (i > 0) out[static_cast<std::size_t>(i - 1)] += a * v.p.scaled(Rational(i));
    if (i < s) out[static_cast<std::size_t>(i)] += a * v.q.scaled(Rational(s - i));
  }
  return BinaryForm(std::move(out));
}

std::optional<BinaryForm> divide_linear(const BinaryForm& f, const Direction& v) {
  // a_i = q*g_{i-1} - p*g_i with g_{-1} = g_s = 0.
  const int s = f.s();
  if (s < 1) return std::nullopt;
  std::vector<Poly> g(static_cast<std::size_t>(s));
  if (!v.q.is_zero()) {
    for (int i = s; i >= 1; --i) {
      Poly num = f.coeff(i);
      if (i < s) num += v.p * g[static_cast<std::size_t>(i)];
      Poly quo;
      if (!divides_exactly(num, v.q, &quo)) return std::nullopt;
      g[static_cast<std::size_t>(i - 1)] = std::move(quo);
    }
    if (f.coeff(0) + v.p * g[0] != Poly()) return std::nullopt;
  } else {
    if (!f.coeff(s).is_zero()) return std::nullopt;
    for (int i = 0; i < s; ++i) {
      Poly quo;
      if (!divides_exactly(-f.coeff(i), v.p, &quo)) return std::nullopt;
      g[static_cast<std::size_t>(i)] = std::move(quo);
    }
  }
  return BinaryForm(std::move(g));
}

int root_multiplicity(const BinaryForm& f, const Direction& v) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity in the zero form");
  int m = 0;
  BinaryForm cur = f;
  while (auto next = divide_linear(cur, v)) {
    cur = std::move(*next);
    ++m;
  }
  return m;
}

int FormRoots::linear_degree() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

FormRoots rational_function_roots(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero form");
  const int s = f.s();
  FormRoots out;
  std::vector<Direction> found;

  int m_inf = 0;
  while (f.coeff(s - m_inf).is_zero()) ++m_inf;
  int m_zero = 0;
  while (f.coeff(m_zero).is_zero()) ++m_zero;
  if (m_inf > 0) found.push_back({Poly(1), Poly()});
  if (m_zero > 0) found.push_back({Poly(), Poly(1)});

  // Middle part: nonzero constant and leading t-coefficients.
  const int sp = s - m_inf - m_zero;
  if (sp >= 1) {
    std::vector<Poly> h(f.coeffs().begin() + m_zero, f.coeffs().begin() + m_zero + sp + 1);
    const auto num_divisors = monic_divisors(factor_rational(h.front()));
    const auto den_divisors = monic_divisors(factor_rational(h.back()));
    for (const auto& d1 : num_divisors) {
      for (const auto& d2 : den_divisors) {
        if (gcd(d1, d2).deg() > 0) continue;
        // t = c*d1/d2 with c in Q; c is a root of the top x-degree slice.
        std::vector<Poly> terms(h.size());
        int top = -1;
        Poly d1_pow(1);
        for (std::size_t i = 0; i < h.size(); ++i) {
          terms[i] = h[i] * d1_pow * pow(d2, static_cast<unsigned>(sp - static_cast<int>(i)));
          if (!terms[i].is_zero()) top = std::max(top, terms[i].deg());
          d1_pow *= d1;
        }
        std::vector<Rational> slice(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) slice[i] = terms[i].coeff(static_cast<std::size_t>(top));
        for (const Rational& c : rational_roots(Poly(slice))) {
          if (c.is_zero()) continue;
          Poly total;
          Rational c_pow(1);
          for (const auto& term : terms) {
            total += term.scaled(c_pow);
            c_pow *= c;
          }
          if (!total.is_zero()) continue;
          Direction dir = normalize_direction(d1.scaled(c), d2);
          if (std::find(found.begin(), found.end(), dir) == found.end()) found.push_back(std::move(dir));
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), direction_less);
  BinaryForm residual = f;
  for (auto& dir : found) {
    int m = 0;
    while (auto next = divide_linear(residual, dir)) {
      residual = std::move(*next);
      ++m;
    }
    out.roots.push_back({std::move(dir), m});
  }

  if (residual.s() >= 1) {
    for (auto& [part, mult] : tp_squarefree(residual.coeffs())) {
      const bool irreducible = tp_deg(part) <= 3;
      out.multisections.push_back({BinaryForm(std::move(part)), mult, irreducible});
    }
    BinaryForm product({Poly(1)});
    for (const auto& ms : out.multisections) {
      for (int k = 0; k < ms.multiplicity; ++k) product = form_product(product, ms.factor);
    }
    out.content = exact_quotient(residual.coeff(residual.s()), product.coeff(product.s()));
  } else {
    out.content = residual.coeff(0);
  }
  return out;
}

}  // namespace tensorhn
