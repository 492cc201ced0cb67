#include "tensorhn/poly.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "tensorhn/error.hpp"

namespace tensorhn {

int Degree::value() const {
  if (neg_inf_) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial is -inf");
  return value_;
}

std::string Degree::to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& coeff, unsigned degree) {
  if (coeff.is_zero()) return {};
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree Poly::degree() const {
  if (c_.empty()) return Degree::neg_inf();
  return Degree(static_cast<int>(c_.size()) - 1);
}

const Rational& Poly::lead() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  return scaled(c_.back().inverse());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& k) const {
  if (k.is_zero()) return {};
  std::vector<Rational> c = c_;
  for (auto& v : c) v *= k;
  return Poly(std::move(c));
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    const bool negative = a.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = a.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero() || a.deg() < b.deg()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.deg());
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv_lead = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational factor = rem[k + db] * inv_lead;
    quo[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool divides_exactly(const Poly& a, const Poly& b, Poly* quotient) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) return false;
  if (quotient != nullptr) *quotient = std::move(qr.quotient);
  return true;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).remainder;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

std::string_view to_string(EventualOrder order) {
  switch (order) {
    case EventualOrder::Precedes: return "precedes";
    case EventualOrder::Equal: return "equal";
    case EventualOrder::Succeeds: return "succeeds";
  }
  return "?";
}

EventualOrder eventual_compare(const Poly& p1, const Poly& p2) {
  const Poly diff = p2 - p1;
  if (diff.is_zero()) return EventualOrder::Equal;
  return diff.lead().sign() > 0 ? EventualOrder::Precedes : EventualOrder::Succeeds;
}

namespace {

// Recursive-descent parser:
//   expr    := term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+'|'-') unary | power
//   power   := primary ('^' digits)?
//   primary := digits ('/' digits)? | VAR | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (vars_.find(ch) != std::string_view::npos) {
      ++pos_;
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::string num = digits();
      // A '/' directly after digits is part of the literal; there is no division operator.
      if (accept('/')) {
        const std::string den = digits();
        return Poly(Rational(Integer(num), Integer(den)));
      }
      return Poly(Rational(Integer(num)));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::string_view variables) {
  return PolyParser(text, variables).parse();
}

}  // namespace tensorhn

std::ostream& tensorhn::operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
