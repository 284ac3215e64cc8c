#include "momentrange/spline.hpp"

#include <algorithm>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

Polynomial lin(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }
Polynomial x_squared() { return Polynomial::monomial(kOne, 2); }

void require_t(const Rational& t, const Rational& upper, const char* family) {
  if (t <= kZero || t >= upper)
    throw Error(std::string("t = ") + t.str() + " is outside the valid range of the " + family + " family");
}

std::vector<PiecewisePolynomial> basis_for(SplineFamily family, const Rational& t) {
  switch (family) {
    case SplineFamily::LeftQuadratic: {
      require_t(t, kOne, "left-quad");
      const std::vector<Rational> bp{kZero, t, kOne};
      const Polynomial one = Polynomial::constant(kOne);
      const Polynomial x = lin(kZero, kOne);
      return {
          PiecewisePolynomial(bp, {one, one}),
          PiecewisePolynomial(bp, {x, x}),
          PiecewisePolynomial(bp, {x_squared(), lin(-t * t, Rational(2) * t)}),
      };
    }
    case SplineFamily::Symmetric: {
      require_t(t, kHalf, "symmetric");
      const std::vector<Rational> bp{kZero, kHalf - t, kHalf + t, kOne};
      const Polynomial one = Polynomial::constant(kOne);
      const Polynomial x = lin(kZero, kOne);
      const Rational quarter(1, 4);
      return {
          PiecewisePolynomial(bp, {one, one, one}),
          PiecewisePolynomial(bp, {x, x, x}),
          PiecewisePolynomial(bp, {lin(-t * t + t - quarter, kOne - Rational(2) * t), x_squared(),
                                   lin(-t * t - t - quarter, kOne + Rational(2) * t)}),
      };
    }
    case SplineFamily::N3: {
      require_t(t, kHalf, "n3");
      const std::vector<Rational> bp{kZero, t, kOne - t, kOne};
      const Polynomial one = Polynomial::constant(kOne);
      const Polynomial x = lin(kZero, kOne);
      const Polynomial tangent = lin(-t * t, Rational(2) * t);
      const Polynomial shifted = lin(t - kOne, kOne);  // x - (1 - t)
      return {
          PiecewisePolynomial(bp, {one, one, one}),
          PiecewisePolynomial(bp, {x, x, x}),
          PiecewisePolynomial(bp, {x_squared(), tangent, tangent}),
          PiecewisePolynomial(bp, {Polynomial(), Polynomial(), shifted * shifted}),
      };
    }
  }
  throw Error("unknown spline family");
}

std::size_t moment_count(SplineFamily family) { return family == SplineFamily::N3 ? 4 : 3; }

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() != breakpoints_.size() - 1)
    throw Error("a piecewise polynomial needs one piece per breakpoint interval");
  if (breakpoints_.front() != kZero || breakpoints_.back() != kOne)
    throw Error("breakpoints must run from 0 to 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (breakpoints_[i] <= breakpoints_[i - 1]) throw Error("breakpoints must increase strictly");
}

PiecewisePolynomial PiecewisePolynomial::single(Polynomial p) { return {{kZero, kOne}, {std::move(p)}}; }

std::size_t PiecewisePolynomial::piece_index(const Rational& x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto idx = static_cast<std::size_t>(std::max<long>(it - breakpoints_.begin() - 1, 0));
  return std::min(idx, pieces_.size() - 1);
}

Rational PiecewisePolynomial::value(const Rational& x) const { return pieces_[piece_index(x)](x); }

Rational PiecewisePolynomial::slope(const Rational& x) const { return pieces_[piece_index(x)].derivative()(x); }

PiecewisePolynomial PiecewisePolynomial::combine(const std::vector<PiecewisePolynomial>& basis,
                                                 const std::vector<Rational>& coefficients) {
  if (basis.empty() || basis.size() != coefficients.size()) throw Error("basis/coefficient size mismatch");
  std::vector<Polynomial> pieces(basis.front().pieces().size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].breakpoints() != basis.front().breakpoints()) throw Error("basis breakpoints differ");
    for (std::size_t i = 0; i < pieces.size(); ++i) pieces[i] += basis[j].pieces()[i] * coefficients[j];
  }
  return {basis.front().breakpoints(), std::move(pieces)};
}

const char* to_string(SplineFamily f) {
  switch (f) {
    case SplineFamily::LeftQuadratic: return "left-quad";
    case SplineFamily::Symmetric: return "symmetric";
    case SplineFamily::N3: return "n3";
  }
  return "?";
}

SplineFamily parse_family(const std::string& name) {
  if (name == "left-quad" || name == "left_quadratic") return SplineFamily::LeftQuadratic;
  if (name == "symmetric") return SplineFamily::Symmetric;
  if (name == "n3") return SplineFamily::N3;
  throw Error("unknown spline family '" + name + "'");
}

const Rational& SplineWitness::coefficient(const std::string& name) const {
  for (const auto& [key, value] : coefficients)
    if (key == name) return value;
  throw Error("no coefficient named " + name);
}

LinearSystem witness_system(SplineFamily family, const MomentVector& m, const Rational& t) {
  const std::size_t dim = moment_count(family);
  if (m.size() != dim) throw WrongDegree(std::string(to_string(family)) + " family needs " + std::to_string(dim) + " moments");
  const auto basis = basis_for(family, t);
  Matrix mat(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) mat(k, j) = spline_moment(basis[j], k);
  return {std::move(mat), m.alphas()};
}

SplineWitness build_witness(SplineFamily family, const MomentVector& m, const Rational& t) {
  const LinearSystem sys = witness_system(family, m, t);
  std::vector<Rational> coef;
  try {
    coef = solve_linear_exact(sys);
  } catch (const SingularSystem&) {
    if (family == SplineFamily::N3) throw DegenerateT("n3 spline system is singular at t = " + t.str());
    throw InternalConsistencyError(std::string(to_string(family)) + " spline system is singular at t = " + t.str());
  }
  SplineWitness w{family, t, PiecewisePolynomial::combine(basis_for(family, t), coef), {}};
  static const char* const kNames[] = {"a", "b", "c", "d"};
  for (std::size_t j = 0; j < coef.size(); ++j) w.coefficients.emplace_back(kNames[j], coef[j]);

  if (spline_moments(w.spline, m.degree()) != m || !c1_check(w.spline))
    throw InternalConsistencyError("spline witness fails its moment or smoothness constraints");
  return w;
}

SplineWitness build_left_quadratic(const MomentVector& m, const Rational& t) {
  return build_witness(SplineFamily::LeftQuadratic, m, t);
}

SplineWitness build_symmetric(const MomentVector& m, const Rational& t) {
  return build_witness(SplineFamily::Symmetric, m, t);
}

SplineWitness build_n3(const MomentVector& m, const Rational& t) { return build_witness(SplineFamily::N3, m, t); }

Rational closed_form_c_n2(const MomentVector& m, const Rational& t) {
  if (m.degree() != 2) throw WrongDegree("closed form needs three moments");
  return Rational(30) * delta(m, 0) / (t.pow(3) * (Rational(6) * t * t - Rational(15) * t + Rational(10)));
}

Rational closed_form_peak_n2(const MomentVector& m, const Rational& t) {
  if (m.degree() != 2) throw WrongDegree("closed form needs three moments");
  const Rational t2 = t * t;
  const Rational num = Rational(6) * t2 * m[1] - Rational(3) * t2 * m[0] - Rational(20) * m[1] + Rational(30) * m[2] +
                       Rational(5) * t * m[0] - Rational(15) * t * m[2];
  return Rational(12) * num / (Rational(6) * t2 - Rational(15) * t + Rational(10));
}

Rational closed_form_c_symmetric(const MomentVector& m, const Rational& t) {
  if (m.degree() != 2) throw WrongDegree("closed form needs three moments");
  const Rational t2 = t * t;
  return Rational(120) * delta(m, 0) / (t * (Rational(15) - Rational(40) * t2 + Rational(48) * t2 * t2));
}

Rational spline_moment(const PiecewisePolynomial& s, std::size_t k) {
  Rational acc;
  for (std::size_t i = 0; i < s.pieces().size(); ++i)
    acc += poly_moment_integral(s.pieces()[i], k, s.breakpoints()[i], s.breakpoints()[i + 1]);
  return acc;
}

MomentVector spline_moments(const PiecewisePolynomial& s, std::size_t degree) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= degree; ++k) out.push_back(spline_moment(s, k));
  return MomentVector(std::move(out));
}

DerivativeRange derivative_range(const PiecewisePolynomial& s) {
  DerivativeRange r;
  bool first = true;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    const Polynomial& p = s.pieces()[i];
    const Rational& lo = s.breakpoints()[i];
    const Rational& hi = s.breakpoints()[i + 1];
    Rational piece_min;
    Rational piece_max;
    if (p.degree() <= 2) {
      const Polynomial d = p.derivative();
      piece_min = std::min(d(lo), d(hi));
      piece_max = std::max(d(lo), d(hi));
    } else {
      const DerivativeEnclosure e = derivative_extremes(p, lo, hi, Rational::pow2(-40));
      piece_min = e.min.lo;
      piece_max = e.max.hi;
      r.exact = r.exact && e.min.exact() && e.max.exact();
    }
    if (first || piece_min < r.min) r.min = piece_min;
    if (first || piece_max > r.max) r.max = piece_max;
    first = false;
  }
  return r;
}

bool c1_check(const PiecewisePolynomial& s) {
  for (std::size_t i = 1; i + 1 < s.breakpoints().size(); ++i) {
    const Rational& x = s.breakpoints()[i];
    const Polynomial& left = s.pieces()[i - 1];
    const Polynomial& right = s.pieces()[i];
    if (left(x) != right(x) || left.derivative()(x) != right.derivative()(x)) return false;
  }
  return true;
}

PiecewisePolynomial reflect_spline(const PiecewisePolynomial& s) {
  std::vector<Rational> bp;
  for (auto it = s.breakpoints().rbegin(); it != s.breakpoints().rend(); ++it) bp.push_back(kOne - *it);
  std::vector<Polynomial> pieces;
  for (auto it = s.pieces().rbegin(); it != s.pieces().rend(); ++it) pieces.push_back(it->reflected());
  return {std::move(bp), std::move(pieces)};
}

Rational predicted_bound(SplineFamily family, const MomentVector& m) {
  if (m.size() != moment_count(family)) throw WrongDegree("moment count does not match the spline family");
  switch (family) {
    case SplineFamily::LeftQuadratic: return Rational(12) * (Rational(3) * m[2] - Rational(2) * m[1]);
    case SplineFamily::Symmetric: return Rational(32) * delta(m, 0).abs();
    case SplineFamily::N3: return Rational(60) * (Rational(3) * m[2] - Rational(2) * m[3] - m[1]);
  }
  throw Error("unknown spline family");
}

ConvergenceStudy convergence_study(const MomentVector& m, SplineFamily family, const std::vector<Rational>& ts) {
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] >= ts[i - 1]) throw Error("t sequence must be strictly decreasing");

  ConvergenceStudy study{family, {}, {}};
  const Rational bound = predicted_bound(family, m);
  for (const Rational& t : ts) {
    SplineWitness w = [&]() -> SplineWitness {
      try {
        return build_witness(family, m, t);
      } catch (const DegenerateT&) {
        return SplineWitness{family, t, PiecewisePolynomial::single({}), {}};
      }
    }();
    if (w.coefficients.empty()) {
      study.skipped.push_back(t);
      continue;
    }
    const DerivativeRange range = derivative_range(w.spline);
    WitnessReport rep{t, w.coefficients, range.min, range.max, {}, bound, {}};
    if (family == SplineFamily::Symmetric) {
      rep.achieved = range.max - range.min;
    } else {
      rep.achieved = w.coefficient("b") + Rational(2) * w.coefficient("c") * t;
    }
    rep.error = (rep.achieved - bound).abs();
    study.reports.push_back(std::move(rep));
  }

  for (std::size_t i = 1; i < study.reports.size(); ++i)
    if (study.reports[i].error > study.reports[i - 1].error) study.non_increasing = false;
  if (study.reports.size() >= 6)
    study.halved = study.reports.back().error <= study.reports.front().error / Rational(2);
  return study;
}

std::vector<Rational> geometric_sequence(const Rational& start, std::size_t count) {
  std::vector<Rational> out;
  Rational t = start;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(t);
    t /= Rational(2);
  }
  return out;
}

Polynomial hilbert_interpolant(const MomentVector& m) {
  const auto coef = solve_linear_exact(LinearSystem(Matrix::hilbert(m.size()), m.alphas()));
  Polynomial p(coef);
  if (moments_of(p, m.degree()) != m) throw InternalConsistencyError("Hilbert interpolant misses its moments");
  return p;
}

DerivativeEnclosure interpolant_derivative_range(const Polynomial& p) {
  if (p.degree() < 1) throw DegreeTooSmall("derivative range needs a polynomial of degree >= 1");
  return derivative_extremes(p, kZero, kOne, Rational::pow2(-40));
}

std::vector<SampleRow> sample(const PiecewisePolynomial& s, std::size_t count) {
  if (count < 2) throw Error("sampling needs at least two points");
  std::vector<SampleRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Rational x(static_cast<long>(i), static_cast<long>(count - 1));
    rows.push_back({x, s.value(x), s.slope(x)});
  }
  return rows;
}

}  // namespace momentrange
