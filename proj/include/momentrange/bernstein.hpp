#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "momentrange/moments.hpp"
#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"

namespace momentrange {

/// D_{1,n} .. D_{n,n}; values[k-1] holds D_{k,n}.
struct FunctionalTable {
  std::size_t n = 0;
  std::vector<Rational> values;

  /// 1-based access matching the usual D_{k,n} labelling.
  const Rational& at(std::size_t k) const;
};

/// Second-derivative functionals for k = 2..n; values[k-2] holds entry k.
struct SecondDerivativeTable {
  std::size_t n = 0;
  std::vector<Rational> values;

  const Rational& at(std::size_t k) const;
};

/// C(n,v) x^v (1-x)^(n-v) expanded in monomials.
Polynomial bernstein_poly(std::size_t v, std::size_t n);

/// Integral over [0,1] of x^k (1-x)^(n+1-k), equal to 1/((n+2) C(n+1,k)).
Rational beta_norm(std::size_t k, std::size_t n);

/// Coefficients w with D_{k,n} = sum_i w_i alpha_i, taken from
/// (n+1)(n+2)(b_{k,n} - b_{k-1,n}). Length n+1.
std::vector<Rational> d_weights(std::size_t k, std::size_t n);

/// D_{k,n} for the vector's own degree n. Requires 1 <= k <= n.
Rational d_value(const MomentVector& m, std::size_t k);
FunctionalTable d_table(const MomentVector& m);

/// Degree n+1 table -> degree n table via the convex combination
/// D_{k,n} = (n+2-k)/(n+3) D_{k,n+1} + (k+1)/(n+3) D_{k+1,n+1}.
FunctionalTable convexity_project(const FunctionalTable& higher);

/// Returns (delta_k, (D_{k+2,k+2} - D_{k+1,k+1}) / (2(k+3))) computed along
/// independent paths. Requires k + 2 <= n.
std::pair<Rational, Rational> connection_check(const MomentVector& m, std::size_t k);

/// D_{n,n} from 6(2 alpha_1 - alpha_0) plus the telescoped delta sum.
Rational d_diag_via_deltas(const MomentVector& m);

/// Returns (k alpha_{k-1}, (k+1) alpha_k - D_{k,k}/((k+1)(k+2))).
std::pair<Rational, Rational> monomial_identity_check(const MomentVector& m, std::size_t k);

/// Mean of f'' against x^k (1-x)^(n+2-k), 2 <= k <= n. Both the weight and its
/// derivative vanish at 0 and 1, so the value is a linear form in the moments.
/// Throws DegreeTooSmall for n < 2.
SecondDerivativeTable second_derivative_values(const MomentVector& m);

}  // namespace momentrange
