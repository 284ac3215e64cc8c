#include "momentrange/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t int_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == int_begin) throw ParseError("expected digits", pos);
  mpz_class num(std::string(text.substr(int_begin, pos - int_begin)), 10);
  mpz_class den = 1;

  if (pos < text.size() && text[pos] == '/') {
    const std::size_t den_begin = ++pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits", pos);
    den = mpz_class(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator", den_begin);
  } else if (pos < text.size() && text[pos] == '.') {
    const std::size_t frac_begin = ++pos;
    pos = scan_digits(text, pos);
    if (pos == frac_begin) throw ParseError("expected fraction digits", pos);
    const std::string frac(text.substr(frac_begin, pos - frac_begin));
    mpz_pow_ui(den.get_mpz_t(), mpz_class(10).get_mpz_t(), frac.size());
    num = num * den + mpz_class(frac, 10);
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);

  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::pow2(int exponent) {
  mpz_class p = 1;
  const unsigned long magnitude = exponent < 0 ? static_cast<unsigned long>(-static_cast<long>(exponent))
                                               : static_cast<unsigned long>(exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  return exponent < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::decimal(int significant_digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, to_double());
  return buf;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(mpq_class(c));
}

}  // namespace momentrange
