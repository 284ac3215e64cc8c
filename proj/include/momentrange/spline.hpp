#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "momentrange/linear_algebra.hpp"
#include "momentrange/moments.hpp"
#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"
#include "momentrange/root_isolation.hpp"

namespace momentrange {

/// Piecewise polynomial on [0, 1]. Pieces are written in the global variable x;
/// piece i lives on [breakpoints[i], breakpoints[i+1]].
class PiecewisePolynomial {
 public:
  /// Breakpoints must increase strictly from 0 to 1, one piece per interval.
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);
  static PiecewisePolynomial single(Polynomial p);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

  /// Piece used for x; interior breakpoints belong to the piece on their right.
  std::size_t piece_index(const Rational& x) const;
  Rational value(const Rational& x) const;
  Rational slope(const Rational& x) const;

  /// Sum of `coefficients[j] * basis[j]`; all basis members share breakpoints.
  static PiecewisePolynomial combine(const std::vector<PiecewisePolynomial>& basis,
                                     const std::vector<Rational>& coefficients);

  friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

enum class SplineFamily { LeftQuadratic, Symmetric, N3 };

const char* to_string(SplineFamily f);
/// Accepts "left-quad", "left_quadratic", "symmetric", "n3".
SplineFamily parse_family(const std::string& name);

using NamedCoefficients = std::vector<std::pair<std::string, Rational>>;

struct SplineWitness {
  SplineFamily family;
  Rational t;
  PiecewisePolynomial spline;
  NamedCoefficients coefficients;

  const Rational& coefficient(const std::string& name) const;
};

/// Moment system sum_j M[k][j] coef_j = alpha_k for a family's free
/// parameters (a, b, c[, d]) at this t.
LinearSystem witness_system(SplineFamily family, const MomentVector& m, const Rational& t);

/// Quadratic on [0,t], tangent line on [t,1]. Three moments, 0 < t < 1.
SplineWitness build_left_quadratic(const MomentVector& m, const Rational& t);
/// Tangent lines outside [1/2 - t, 1/2 + t], quadratic inside. Three moments, 0 < t < 1/2.
SplineWitness build_symmetric(const MomentVector& m, const Rational& t);
/// Quadratic on [0,t], line on [t,1-t], quadratic on [1-t,1]. Four moments,
/// 0 < t < 1/2. Throws DegenerateT when the system is singular.
SplineWitness build_n3(const MomentVector& m, const Rational& t);
SplineWitness build_witness(SplineFamily family, const MomentVector& m, const Rational& t);

/// c = 30 delta_0 / (t^3 (6t^2 - 15t + 10)) for the left-quadratic family.
Rational closed_form_c_n2(const MomentVector& m, const Rational& t);
/// Slope b + 2ct of the linear piece of the left-quadratic family.
Rational closed_form_peak_n2(const MomentVector& m, const Rational& t);
/// c = 120 delta_0 / (t (15 - 40t^2 + 48t^4)) for the symmetric family.
Rational closed_form_c_symmetric(const MomentVector& m, const Rational& t);

Rational spline_moment(const PiecewisePolynomial& s, std::size_t k);
MomentVector spline_moments(const PiecewisePolynomial& s, std::size_t degree);

struct DerivativeRange {
  Rational min;
  Rational max;
  /// False when some piece has degree > 2 and the bounds are outer enclosures.
  bool exact = true;
};

DerivativeRange derivative_range(const PiecewisePolynomial& s);

/// Value and first-derivative continuity at every interior breakpoint.
bool c1_check(const PiecewisePolynomial& s);

/// x -> s(1 - x).
PiecewisePolynomial reflect_spline(const PiecewisePolynomial& s);

struct WitnessReport {
  Rational t;
  NamedCoefficients coefficients;
  Rational derivative_min;
  Rational derivative_max;
  /// The quantity tracked toward the bound: linear-piece slope for the
  /// left-quadratic and n3 families, derivative-range width for symmetric.
  Rational achieved;
  Rational predicted_bound;
  Rational error;
};

struct ConvergenceStudy {
  SplineFamily family;
  std::vector<WitnessReport> reports;
  std::vector<Rational> skipped;  // degenerate t values
  bool non_increasing = true;
  /// final error <= first error / 2; only required for >= 6 reports.
  bool halved = true;
  bool passed() const { return non_increasing && halved && !reports.empty(); }
};

/// The limit each family approaches as t -> 0.
Rational predicted_bound(SplineFamily family, const MomentVector& m);

/// Builds the family for each t (strictly decreasing, inside the family's
/// range) and tracks the distance to the predicted bound.
ConvergenceStudy convergence_study(const MomentVector& m, SplineFamily family, const std::vector<Rational>& ts);

/// t_j = start / 2^j for j = 0..count-1.
std::vector<Rational> geometric_sequence(const Rational& start, std::size_t count);

/// Unique polynomial of degree <= n with the given moments (Hilbert solve).
Polynomial hilbert_interpolant(const MomentVector& m);

/// Enclosures of min and max of p' on [0,1]; critical points are refined to
/// width <= 2^-40. Requires degree >= 1.
DerivativeEnclosure interpolant_derivative_range(const Polynomial& p);

struct SampleRow {
  Rational x;
  Rational value;
  Rational slope;
};

/// `count` equally spaced points including 0 and 1. Requires count >= 2.
std::vector<SampleRow> sample(const PiecewisePolynomial& s, std::size_t count);

}  // namespace momentrange
