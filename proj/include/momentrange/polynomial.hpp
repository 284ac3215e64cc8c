#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "momentrange/rational.hpp"

namespace momentrange {

/// Dense univariate polynomial with exact coefficients; coeffs()[i] multiplies x^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * x^power
  static Polynomial monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// p(1 - x).
  Polynomial reflected() const;
  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human readable form, e.g. "27 - 192*x + 210*x^2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact value of the integral of x^k p(x) over [lo, hi].
Rational poly_moment_integral(const Polynomial& p, std::size_t k, const Rational& lo, const Rational& hi);

/// Euclidean division; returns quotient and stores the remainder.
Polynomial poly_divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial* remainder);
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace momentrange
