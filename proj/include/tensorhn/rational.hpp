#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace tensorhn {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;

  template <typename T>
    requires std::is_integral_v<T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(const Integer& value) : q_(value) {}  // NOLINT(implicit)
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& value) : q_(Integer(value)) {}  // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  std::string to_string() const;
  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tensorhn
