#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"

namespace momentrange {

/// Hausdorff moments alpha_k = integral over [0,1] of x^k f(x), k = 0..n.
class MomentVector {
 public:
  /// Throws Error when `alphas` is empty.
  explicit MomentVector(std::vector<Rational> alphas);

  /// n, the highest moment index.
  std::size_t degree() const { return alphas_.size() - 1; }
  std::size_t size() const { return alphas_.size(); }
  const Rational& operator[](std::size_t k) const { return alphas_[k]; }
  const std::vector<Rational>& alphas() const { return alphas_; }

  /// First `new_degree + 1` moments.
  MomentVector truncated(std::size_t new_degree) const;

  friend bool operator==(const MomentVector&, const MomentVector&) = default;

 private:
  std::vector<Rational> alphas_;
};

/// Exact moments of a polynomial on [0, 1].
MomentVector moments_of(const Polynomial& p, std::size_t degree);

/// The three-term form measuring how far alpha_k..alpha_{k+2} are from the
/// moments of a linear function. Requires k + 2 <= n.
Rational delta(const MomentVector& m, std::size_t k);
/// delta(m, 0) .. delta(m, n-2); empty for n < 2.
std::vector<Rational> delta_sequence(const MomentVector& m);

/// Moments of x -> f(1 - x).
MomentVector reflect(const MomentVector& m);
MomentVector negate(const MomentVector& m);

struct LinearFit {
  Rational intercept;  // u
  Rational slope;      // v
};

struct LinearConsistency {
  bool is_linear = false;
  std::optional<LinearFit> coeffs;
};

/// Whether some u + v x has exactly these moments. Runs the rank test and,
/// for n >= 2, the vanishing-delta test; disagreement raises
/// InternalConsistencyError. Requires n >= 1.
LinearConsistency linear_consistency(const MomentVector& m);

/// Comma-separated rational literals, whitespace around entries allowed.
MomentVector parse_moments(std::string_view text);
std::string serialize_moments(const MomentVector& m);

}  // namespace momentrange
