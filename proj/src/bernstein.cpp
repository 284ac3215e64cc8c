#include "momentrange/bernstein.hpp"

#include <string>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

Rational dot(const std::vector<Rational>& weights, const MomentVector& m) {
  Rational acc;
  for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * m[i];
  return acc;
}

// x^a (1-x)^b
Polynomial beta_weight(std::size_t a, std::size_t b) {
  Polynomial p = Polynomial::monomial(Rational(1), a);
  const Polynomial one_minus_x{Rational(1), Rational(-1)};
  for (std::size_t i = 0; i < b; ++i) p = p * one_minus_x;
  return p;
}

}  // namespace

const Rational& FunctionalTable::at(std::size_t k) const {
  if (k < 1 || k > values.size()) throw IndexOutOfRange("functional index " + std::to_string(k));
  return values[k - 1];
}

const Rational& SecondDerivativeTable::at(std::size_t k) const {
  if (k < 2 || k - 2 >= values.size()) throw IndexOutOfRange("second-derivative index " + std::to_string(k));
  return values[k - 2];
}

Polynomial bernstein_poly(std::size_t v, std::size_t n) {
  if (v > n) throw IndexOutOfRange("Bernstein index exceeds degree");
  return beta_weight(v, n - v) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(v));
}

Rational beta_norm(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw IndexOutOfRange("beta norm needs 1 <= k <= n");
  return (Rational(static_cast<long>(n + 2)) * binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)))
      .inverse();
}

std::vector<Rational> d_weights(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw IndexOutOfRange("D_{k,n} needs 1 <= k <= n");
  const Polynomial w = (bernstein_poly(k, n) - bernstein_poly(k - 1, n)) *
                       Rational(static_cast<long>((n + 1) * (n + 2)));
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = w.coeff(i);
  return out;
}

Rational d_value(const MomentVector& m, std::size_t k) { return dot(d_weights(k, m.degree()), m); }

FunctionalTable d_table(const MomentVector& m) {
  FunctionalTable t{m.degree(), {}};
  for (std::size_t k = 1; k <= m.degree(); ++k) t.values.push_back(d_value(m, k));
  return t;
}

FunctionalTable convexity_project(const FunctionalTable& higher) {
  if (higher.n < 2 || higher.values.size() != higher.n)
    throw DegreeTooSmall("convexity projection needs a table of degree >= 2");
  const std::size_t n = higher.n - 1;
  FunctionalTable lower{n, {}};
  const Rational denom(static_cast<long>(n + 3));
  for (std::size_t k = 1; k <= n; ++k) {
    lower.values.push_back(Rational(static_cast<long>(n + 2 - k)) / denom * higher.at(k) +
                           Rational(static_cast<long>(k + 1)) / denom * higher.at(k + 1));
  }
  return lower;
}

std::pair<Rational, Rational> connection_check(const MomentVector& m, std::size_t k) {
  if (k + 2 > m.degree()) throw IndexOutOfRange("connection identity needs k + 2 <= n");
  const Rational outer = d_value(m.truncated(k + 2), k + 2);
  const Rational inner = d_value(m.truncated(k + 1), k + 1);
  return {delta(m, k), (outer - inner) / Rational(2 * static_cast<long>(k + 3))};
}

Rational d_diag_via_deltas(const MomentVector& m) {
  if (m.degree() < 1) throw DegreeTooSmall("D_{n,n} needs n >= 1");
  Rational acc = Rational(6) * (Rational(2) * m[1] - m[0]);
  const auto deltas = delta_sequence(m);
  for (std::size_t k = 0; k < deltas.size(); ++k) acc += Rational(2 * static_cast<long>(k + 3)) * deltas[k];
  return acc;
}

std::pair<Rational, Rational> monomial_identity_check(const MomentVector& m, std::size_t k) {
  if (k < 1 || k > m.degree()) throw IndexOutOfRange("monomial identity needs 1 <= k <= n");
  const long kk = static_cast<long>(k);
  const Rational lhs = Rational(kk) * m[k - 1];
  const Rational rhs = Rational(kk + 1) * m[k] - d_value(m.truncated(k), k) / Rational((kk + 1) * (kk + 2));
  return {lhs, rhs};
}

SecondDerivativeTable second_derivative_values(const MomentVector& m) {
  const std::size_t n = m.degree();
  if (n < 2) throw DegreeTooSmall("second-derivative functionals need n >= 2");
  SecondDerivativeTable t{n, {}};
  for (std::size_t k = 2; k <= n; ++k) {
    const Polynomial w = beta_weight(k, n + 2 - k);
    const Polynomial w2 = w.derivative().derivative();
    Rational num;
    for (std::size_t i = 0; i <= n; ++i) num += w2.coeff(i) * m[i];
    t.values.push_back(num / poly_moment_integral(w, 0, Rational(0), Rational(1)));
  }
  return t;
}

}  // namespace momentrange
