#pragma once

#include <vector>

#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"

namespace momentrange {

/// Closed rational interval; lo == hi marks an exact value.
struct Enclosure {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Distinct real roots of a nonzero polynomial in [lo, hi], each isolated
/// (Sturm sequence of the square-free part) and then refined by sign-change
/// bisection until narrower than `max_width`. Sorted ascending.
std::vector<Enclosure> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                          const Rational& max_width);

/// Enclosures for the minimum and maximum of p' over [lo, hi].
struct DerivativeEnclosure {
  Enclosure min;
  Enclosure max;
};

DerivativeEnclosure derivative_extremes(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& max_width);

}  // namespace momentrange
