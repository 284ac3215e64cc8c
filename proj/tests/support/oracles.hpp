#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "momentrange/linear_algebra.hpp"
#include "momentrange/moments.hpp"
#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"

namespace momentrange::testing {

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational next(long max_num = 20, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  /// Uniform-ish rational strictly inside (lo, hi).
  Rational inside(const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<long> pick(1, 999);
    return lo + (hi - lo) * Rational(pick(rng_), 1000);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(rng_);
  }

  MomentVector moments(std::size_t n) {
    std::vector<Rational> a;
    for (std::size_t k = 0; k <= n; ++k) a.push_back(next());
    return MomentVector(std::move(a));
  }

  Polynomial polynomial(std::size_t max_degree) {
    std::vector<Rational> c;
    const std::size_t deg = index(0, max_degree);
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(next(9, 5));
    return Polynomial(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

/// Laplace expansion along the first row.
inline Rational cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det;
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, col) * cofactor_determinant(minor);
    det = col % 2 == 0 ? det + term : det - term;
  }
  return det;
}

/// x^a (1-x)^b expanded term by term with explicit binomials.
inline Polynomial beta_weight_oracle(std::size_t a, std::size_t b) {
  std::vector<Rational> c(a + b + 1);
  Rational binom(1);
  for (std::size_t j = 0; j <= b; ++j) {
    c[a + j] = j % 2 == 0 ? binom : -binom;
    binom = binom * Rational(static_cast<long>(b - j)) / Rational(static_cast<long>(j + 1));
  }
  return Polynomial(std::move(c));
}

/// Integral of p over [0, 1] by summing c_i / (i + 1).
inline Rational integrate_unit(const Polynomial& p) {
  Rational acc;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) acc += p.coeffs()[i] / Rational(static_cast<long>(i + 1));
  return acc;
}

/// -(n+2) * integral of f * d/dx [C(n+1,k) x^k (1-x)^(n+1-k)] for an explicit f.
inline Rational d_value_by_integration(const Polynomial& f, std::size_t k, std::size_t n) {
  Rational binom(1);
  for (std::size_t i = 0; i < k; ++i)
    binom = binom * Rational(static_cast<long>(n + 1 - i)) / Rational(static_cast<long>(i + 1));
  const Polynomial weight = beta_weight_oracle(k, n + 1 - k) * binom;
  return -Rational(static_cast<long>(n + 2)) * integrate_unit(f * weight.derivative());
}

/// Exact moments of f by term-wise integration.
inline MomentVector moments_by_integration(const Polynomial& f, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(integrate_unit(f * Polynomial::monomial(Rational(1), k)));
  return MomentVector(std::move(out));
}

/// Max over all 2^{n+1} sign vertices of (max_k D_k - min_k D_k), given the
/// D weight rows. Returns the width and the first maximizing vertex in
/// enumeration order (bit i set means entry i is -1).
struct VertexMax {
  Rational width;
  std::vector<int> vertex;
};

inline VertexMax enumerate_vertices(const std::vector<std::vector<Rational>>& weight_rows) {
  const std::size_t dim = weight_rows.front().size();
  VertexMax best{Rational(-1), {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    std::vector<int> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1U ? -1 : 1;
    bool first = true;
    Rational lo, hi;
    for (const auto& row : weight_rows) {
      Rational d;
      for (std::size_t i = 0; i < dim; ++i) d += v[i] > 0 ? row[i] : -row[i];
      if (first || d < lo) lo = d;
      if (first || d > hi) hi = d;
      first = false;
    }
    if (hi - lo > best.width) best = {hi - lo, v};
  }
  return best;
}

}  // namespace momentrange::testing

namespace momentrange::testing {

/// D_{k,n} weight row from -(n+2) d/dx [C(n+1,k) x^k (1-x)^(n+1-k)].
inline std::vector<Rational> d_weights_oracle(std::size_t k, std::size_t n) {
  Rational binom(1);
  for (std::size_t i = 0; i < k; ++i)
    binom = binom * Rational(static_cast<long>(n + 1 - i)) / Rational(static_cast<long>(i + 1));
  const Polynomial slope = (beta_weight_oracle(k, n + 1 - k) * binom).derivative();
  std::vector<Rational> row(n + 1);
  for (std::size_t i = 0; i <= n; ++i) row[i] = -Rational(static_cast<long>(n + 2)) * slope.coeff(i);
  return row;
}

}  // namespace momentrange::testing
