#include "tensorhn/factor.hpp"

#include <algorithm>
#include <utility>

#include "tensorhn/error.hpp"

namespace tensorhn {

namespace {

using IntPoly = std::vector<Integer>;

// Scales f to a primitive integer polynomial with positive leading coefficient.
IntPoly primitive_integer(const Poly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) {
    const Integer d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntPoly out;
  out.reserve(f.coeffs().size());
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (f.lead().sign() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

Poly to_poly(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Poly(std::move(c));
}

Integer eval_int(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Positive divisors of |n|, n != 0, ascending.
std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 25) > 0) break;
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
      int e = 0;
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
        m /= p;
        ++e;
      }
      primes.emplace_back(p, e);
    }
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t n0 = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
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

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  Poly result(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Poly({Rational(-xs[i]), Rational(1)}) + Poly(dd[i]);
  }
  return result;
}

bool has_integer_coeffs(const Poly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return c.is_integer(); });
}

// Kronecker: search for an integer factor of exact degree k of the primitive
// squarefree polynomial g. Returns the zero polynomial when none exists.
Poly kronecker_factor(const IntPoly& g, int k) {
  const Poly gp = to_poly(g);
  struct Sample {
    Integer x;
    std::vector<Integer> divisors;
  };
  std::vector<Sample> samples;
  for (long step = 0; samples.size() < static_cast<std::size_t>(3 * (k + 1) + 4); ++step) {
    const Integer x = (step % 2 == 0) ? Integer(step / 2) : Integer(-(step + 1) / 2);
    const Integer v = eval_int(g, x);
    if (v == 0) continue;  // only possible for rational roots, which are stripped already
    samples.push_back({x, positive_divisors(v)});
  }
  std::stable_sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
    return a.divisors.size() < b.divisors.size();
  });
  samples.resize(static_cast<std::size_t>(k + 1));

  const Integer& lead = g.back();
  const Integer& tail = g.front();
  std::vector<Integer> xs;
  for (const auto& s : samples) xs.push_back(s.x);
  std::vector<Integer> ys(xs.size());

  Poly found;
  // Depth-first over divisor choices; the first sample is kept positive,
  // which fixes the sign ambiguity of the factor.
  auto search = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == samples.size()) {
      Poly h = interpolate(xs, ys);
      if (h.is_zero() || h.deg() != k || !has_integer_coeffs(h)) return false;
      const Integer hl = h.lead().numerator();
      const Integer ht = h.coeff(0).numerator();
      if (mpz_divisible_p(lead.get_mpz_t(), hl.get_mpz_t()) == 0) return false;
      if (ht == 0 || mpz_divisible_p(tail.get_mpz_t(), ht.get_mpz_t()) == 0) return false;
      if (!divides_exactly(gp, h)) return false;
      found = h;
      return true;
    }
    for (const auto& d : samples[idx].divisors) {
      ys[idx] = d;
      if (self(self, idx + 1)) return true;
      if (idx == 0) continue;
      ys[idx] = -d;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

void factor_squarefree_into(const Poly& g, std::vector<Poly>& out) {
  if (g.is_zero() || g.deg() == 0) return;
  Poly rest = g.monic();
  for (const Rational& r : rational_roots(rest)) {
    const Poly lin({-r, Rational(1)});
    out.push_back(lin);
    rest = divmod(rest, lin).quotient;
  }
  if (rest.deg() == 0) return;
  if (rest.deg() <= 3) {
    out.push_back(rest);
    return;
  }
  const IntPoly ip = primitive_integer(rest);
  for (int k = 2; 2 * k <= rest.deg(); ++k) {
    const Poly h = kronecker_factor(ip, k);
    if (h.is_zero()) continue;
    factor_squarefree_into(h.monic(), out);
    factor_squarefree_into(divmod(rest, h).quotient.monic(), out);
    return;
  }
  out.push_back(rest);
}

}  // namespace

Poly Factorization::expand() const {
  Poly result(constant);
  for (const auto& f : factors) result *= pow(f.factor, static_cast<unsigned>(f.multiplicity));
  return result;
}

Factorization squarefree_decompose(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of 0");
  Factorization out{f.lead(), {}};
  const Poly m = f.monic();
  if (m.deg() == 0) return out;
  const Poly a0 = gcd(m, m.derivative());
  Poly b = divmod(m, a0).quotient;
  Poly c = divmod(m.derivative(), a0).quotient;
  Poly d = c - b.derivative();
  for (int i = 1; b.deg() > 0; ++i) {
    const Poly a = gcd(b, d);
    if (a.deg() > 0) out.factors.push_back({a, i});
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }
  return out;
}

Factorization factor_rational(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of 0");
  const Factorization sqf = squarefree_decompose(f);
  Factorization out{sqf.constant, {}};
  for (const auto& part : sqf.factors) {
    std::vector<Poly> irreducibles;
    factor_squarefree_into(part.factor, irreducibles);
    for (auto& p : irreducibles) out.factors.push_back({std::move(p), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return poly_less(a.factor, b.factor);
  });
  return out;
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of 0");
  std::vector<Rational> roots;
  if (f.deg() == 0) return roots;
  IntPoly p = primitive_integer(f);
  if (p.front() == 0) {
    roots.emplace_back(0);
    auto nz = std::find_if(p.begin(), p.end(), [](const Integer& v) { return v != 0; });
    p.erase(p.begin(), nz);
  }
  if (p.size() > 1) {
    const Poly pp = to_poly(p);
    const auto num_divs = positive_divisors(p.front());
    const auto den_divs = positive_divisors(p.back());
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          const Rational r(Integer(a * sign), b);
          if (pp.eval(r).is_zero()) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Poly> monic_divisors(const Factorization& fac) {
  std::vector<Poly> divs{Poly(1)};
  for (const auto& f : fac.factors) {
    const std::size_t n0 = divs.size();
    Poly pk(1);
    for (int e = 1; e <= f.multiplicity; ++e) {
      pk *= f.factor;
      for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace tensorhn
