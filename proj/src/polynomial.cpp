#include "momentrange/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "momentrange/errors.hpp"

namespace momentrange {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Polynomial Polynomial::reflected() const { return compose(Polynomial({Rational(1), Rational(-1)})); }

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Rational poly_moment_integral(const Polynomial& p, std::size_t k, const Rational& lo, const Rational& hi) {
  const Polynomial anti = (Polynomial::monomial(Rational(1), k) * p).antiderivative();
  return anti(hi) - anti(lo);
}

Polynomial poly_divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial* remainder) {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Polynomial rem = dividend;
  const int dd = divisor.degree();
  const Rational lead = divisor.coeffs().back();
  std::vector<Rational> quot(std::max(rem.degree() - dd + 1, 0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const auto shift = static_cast<std::size_t>(rem.degree() - dd);
    const Rational factor = rem.coeffs().back() / lead;
    quot[shift] = factor;
    rem -= Polynomial::monomial(factor, shift) * divisor;
  }
  if (remainder != nullptr) *remainder = std::move(rem);
  return Polynomial(std::move(quot));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r;
    poly_divide(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.coeffs().back().inverse();
}

}  // namespace momentrange
