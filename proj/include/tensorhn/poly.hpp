#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tensorhn/rational.hpp"

namespace tensorhn {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
/// Addition is total: -inf absorbs.
class Degree {
 public:
  constexpr Degree(int value) : value_(value), neg_inf_(false) {}  // NOLINT(implicit)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return neg_inf_; }
  int value() const;

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return Degree(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Degree() : value_(0), neg_inf_(true) {}
  int value_;
  bool neg_inf_;
};

/// Univariate polynomial over Q; coefficient i multiplies x^i. No trailing
/// zero coefficients are ever stored.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(implicit)
  template <typename T>
    requires std::is_integral_v<T>
  Poly(T constant) : Poly(Rational(constant)) {}  // NOLINT(implicit)
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly x();
  static Poly monomial(const Rational& coeff, unsigned degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const;
  /// Degree as an int; only valid for nonzero polynomials.
  int deg() const { return degree().value(); }
  const Rational& lead() const;
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& k) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Renders in the input grammar, e.g. "3/2*x^2 - x + 7".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
/// Exact quotient a/b; returns false (and leaves out untouched) if b does not divide a.
bool divides_exactly(const Poly& a, const Poly& b, Poly* quotient = nullptr);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

enum class EventualOrder { Precedes, Equal, Succeeds };

std::string_view to_string(EventualOrder order);

/// Compares p1(m) and p2(m) for m >> 0.
EventualOrder eventual_compare(const Poly& p1, const Poly& p2);

/// Parses the polynomial text grammar: rational literals (n or a/b), the
/// variable, + - * ^ (nonnegative integer exponents) and parentheses.
/// Every character of `variables` is accepted as the indeterminate.
Poly parse_poly(std::string_view text, std::string_view variables = "x");

}  // namespace tensorhn
