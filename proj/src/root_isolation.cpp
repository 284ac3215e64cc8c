#include "momentrange/root_isolation.hpp"

#include <algorithm>
#include <utility>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free) {
    seq_.push_back(square_free);
    seq_.push_back(square_free.derivative());
    while (!seq_.back().is_zero()) {
      Polynomial rem;
      poly_divide(seq_[seq_.size() - 2], seq_.back(), &rem);
      if (rem.is_zero()) break;
      seq_.push_back(-rem);
    }
  }

  // Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  int variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
      const int s = p(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<Polynomial> seq_;
};

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

// Refine the single root of `sf` in (a, b] down to `max_width`.
Enclosure refine(const Polynomial& sf, const SturmSequence& sturm, Rational a, Rational b, const Rational& max_width) {
  if (sf(b).is_zero()) return {b, b};
  // The left end may be a neighbouring root; shrink until both ends are nonzero.
  while (sf(a).is_zero()) {
    const Rational mid = midpoint(a, b);
    if (sf(mid).is_zero() && sturm.count(a, mid) == 1) return {mid, mid};
    if (sturm.count(a, mid) == 1) {
      b = mid;
    } else {
      a = mid;
    }
  }
  int sign_a = sf(a).sign();
  while (b - a > max_width) {
    const Rational mid = midpoint(a, b);
    const int s = sf(mid).sign();
    if (s == 0) return {mid, mid};
    if (s == sign_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return {a, b};
}

// Upper bound of |q| on [a, b] from absolute coefficients.
Rational magnitude_bound(const Polynomial& q, const Rational& a, const Rational& b) {
  const Rational r = std::max(a.abs(), b.abs());
  Rational acc;
  Rational power(1);
  for (const auto& c : q.coeffs()) {
    acc += c.abs() * power;
    power *= r;
  }
  return acc;
}

}  // namespace

std::vector<Enclosure> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                          const Rational& max_width) {
  if (p.is_zero()) throw Error("root isolation of the zero polynomial");
  if (hi < lo) throw Error("root isolation on an empty interval");
  std::vector<Enclosure> roots;
  if (p.degree() == 0) return roots;

  Polynomial sf = poly_divide(p, poly_gcd(p, p.derivative()), nullptr);
  const SturmSequence sturm(sf);

  if (sf(lo).is_zero()) roots.push_back({lo, lo});
  std::vector<std::pair<Rational, Rational>> pending{{lo, hi}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    const int n = sturm.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      roots.push_back(refine(sf, sturm, a, b, max_width));
      continue;
    }
    const Rational mid = midpoint(a, b);
    pending.emplace_back(a, mid);
    pending.emplace_back(mid, b);
  }
  std::sort(roots.begin(), roots.end(), [](const Enclosure& x, const Enclosure& y) { return x.lo < y.lo; });
  return roots;
}

DerivativeEnclosure derivative_extremes(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& max_width) {
  const Polynomial d1 = p.derivative();
  const Polynomial d2 = d1.derivative();
  std::vector<Enclosure> candidates{{d1(lo), d1(lo)}, {d1(hi), d1(hi)}};
  if (!d2.is_zero()) {
    for (const Enclosure& root : isolate_real_roots(d2, lo, hi, max_width)) {
      if (root.exact()) {
        candidates.push_back({d1(root.lo), d1(root.lo)});
        continue;
      }
      // p' varies by at most max|p''| * half-width around the midpoint.
      const Rational mid = midpoint(root.lo, root.hi);
      const Rational slack = magnitude_bound(d2, root.lo, root.hi) * root.width() / Rational(2);
      candidates.push_back({d1(mid) - slack, d1(mid) + slack});
    }
  }
  DerivativeEnclosure out{candidates.front(), candidates.front()};
  for (const Enclosure& c : candidates) {
    out.min.lo = std::min(out.min.lo, c.lo);
    out.min.hi = std::min(out.min.hi, c.hi);
    out.max.lo = std::max(out.max.lo, c.lo);
    out.max.hi = std::max(out.max.hi, c.hi);
  }
  return out;
}

}  // namespace momentrange
