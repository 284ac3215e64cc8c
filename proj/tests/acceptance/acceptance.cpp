// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion outside kKnownUnattainable fails, or when a criterion in
// that set starts passing (so the set cannot silently go stale).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "momentrange/bernstein.hpp"
#include "momentrange/certificate.hpp"
#include "momentrange/cli.hpp"
#include "momentrange/extremal.hpp"
#include "momentrange/identities.hpp"
#include "momentrange/spline.hpp"
#include "../support/oracles.hpp"

using namespace momentrange;
using momentrange::testing::RationalGen;

namespace {

// Pinned tolerances.
constexpr double kConvergenceRelTol = 0.01;
constexpr double kEnclosureWidthTol = 1e-9;
constexpr std::size_t kIdentityVectors = 200;
constexpr std::size_t kOraclePolynomials = 100;
constexpr std::size_t kWitnessPairs = 20;
constexpr std::uint64_t kSeed = 20240611;

// Criterion 7 asks for c(t) t^3 -> 8 on (0,0,1,1). The exact limit of the
// solved n3 system is 3 (delta_0 - delta_1) = 24, so that sub-check cannot
// pass; it is run as stated and reported as FAIL.
const std::set<int> kKnownUnattainable = {7};

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      details.push_back(what);
    }
  }
};

MomentVector mv(std::initializer_list<Rational> a) { return MomentVector(std::vector<Rational>(a)); }

bool within_rel(double value, double target, double tol) { return std::abs(value - target) <= tol * std::abs(target); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome criterion1() {
  Outcome o;
  const auto c = certificate(mv({1, 2, 3}));
  o.require(c.A && *c.A == Rational(-24), "A(1,2,3) != -24");
  o.require(c.B && *c.B == Rational(60), "B(1,2,3) != 60");
  const auto l = certificate(mv({1, 1}));
  o.require(l.A && *l.A == Rational(6) && *l.B == Rational(6), "certificate(1,1) != 6");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    std::vector<Rational> a;
    for (long k = 0; k <= n; ++k) a.emplace_back(k + 1);
    const MomentVector m(a);
    const auto c = certificate(m);
    o.require(*c.A == Rational(-n * (n + 1) * (n + 2)) && *c.B == Rational((n + 1) * (n + 2) * (2 * n + 1)),
              "certificate mismatch at n=" + std::to_string(n));
    for (long k = 1; k <= n - 2; ++k)
      o.require(d_value(m, static_cast<std::size_t>(k)).is_zero(),
                "D nonzero at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const struct {
    std::size_t n;
    Rational width;
    MomentVector vertex;
  } cases[] = {{2, Rational(156), mv({1, -1, 1})}, {3, Rational(760), mv({1, -1, 1, -1})}};
  for (const auto& c : cases) {
    const auto r = maximize_spread(c.n);
    o.require(r.max_width == c.width, "maximize_spread(" + std::to_string(c.n) + ") = " + r.max_width.str());
    o.require(r.argmax == c.vertex, "argmax differs at n=" + std::to_string(c.n));
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 1; k <= c.n; ++k) rows.push_back(momentrange::testing::d_weights_oracle(k, c.n));
    o.require(momentrange::testing::enumerate_vertices(rows).width == c.width,
              "vertex enumeration disagrees at n=" + std::to_string(c.n));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  RationalGen gen(kSeed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < kIdentityVectors; ++i) {
    const MomentVector m = gen.moments(gen.index(2, 10));
    for (const auto& r : verify_identities(m)) {
      if (!r.passed) {
        ++failures;
        if (o.details.size() < 5) o.details.push_back(r.name + " on " + serialize_moments(m) + ": " + r.detail);
      }
    }
    if (m.degree() >= 3) {
      const auto outer = certificate(m);
      const auto inner = certificate(m.truncated(m.degree() - 1));
      if (!(*outer.A <= *inner.A && *inner.B <= *outer.B)) ++failures;
    }
    if (m.degree() == 3) {
      const Rational C = d_value(m, 3), D = d_value(m, 2), E = d_value(m, 1);
      const MomentVector two = m.truncated(2);
      if (d_value(two, 1) != Rational(2, 5) * D + Rational(3, 5) * E) ++failures;
      if (d_value(two, 2) != Rational(3, 5) * C + Rational(2, 5) * D) ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " identity failures");
  return o;
}

Outcome criterion5() {
  Outcome o;
  RationalGen gen(kSeed + 1);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kOraclePolynomials; ++i) {
    const Polynomial f = gen.polynomial(6);
    const std::size_t n = gen.index(1, 10);
    const MomentVector m = momentrange::testing::moments_by_integration(f, n);
    for (std::size_t k = 1; k <= n; ++k)
      if (d_value(m, k) != momentrange::testing::d_value_by_integration(f, k, n)) ++mismatches;
  }
  for (int i = 0; i < 20; ++i) {
    const Rational slope = gen.next();
    const Polynomial f({gen.next(), slope});
    const MomentVector m = momentrange::testing::moments_by_integration(f, gen.index(1, 10));
    for (const auto& v : d_table(m).values)
      if (v != slope) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches against direct integration");
  return o;
}

Outcome criterion6() {
  Outcome o;
  RationalGen gen(kSeed + 2);
  for (std::size_t i = 0; i < kWitnessPairs; ++i) {
    const MomentVector m2 = gen.moments(2);
    const MomentVector m3 = gen.moments(3);
    const Rational t = gen.inside(Rational(0), Rational(1, 2));
    const struct {
      SplineWitness w;
      MomentVector m;
    } built[] = {{build_left_quadratic(m2, t), m2}, {build_symmetric(m2, t), m2}, {build_n3(m3, t), m3}};
    for (const auto& b : built) {
      const std::string tag = std::string(to_string(b.w.family)) + " t=" + t.str();
      o.require(spline_moments(b.w.spline, b.m.degree()) == b.m, tag + ": moments");
      o.require(c1_check(b.w.spline), tag + ": C1");
      const auto r = derivative_range(b.w.spline);
      const auto c = certificate(b.m);
      o.require(r.min <= *c.A && *c.B <= r.max, tag + ": range misses certificate");
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto ts = geometric_sequence(Rational(1, 8), 8);  // 2^-3 .. 2^-10

  const auto lq = convergence_study(mv({1, 1, 2}), SplineFamily::LeftQuadratic, ts);
  bool decreasing = true;
  for (std::size_t i = 1; i < lq.reports.size(); ++i)
    decreasing = decreasing && lq.reports[i].achieved < lq.reports[i - 1].achieved;
  const double lq_last = lq.reports.back().achieved.to_double();
  o.require(decreasing, "left-quad peaks not decreasing");
  o.require(within_rel(lq_last, 48, kConvergenceRelTol), "left-quad peak " + fmt(lq_last) + " vs 48");

  const auto sym = convergence_study(mv({1, 1, 2}), SplineFamily::Symmetric, ts);
  const double sym_last = sym.reports.back().achieved.to_double();
  o.require(within_rel(sym_last, 224, kConvergenceRelTol), "symmetric width " + fmt(sym_last) + " vs 224");

  const MomentVector m = mv({0, 0, 1, 1});
  const auto n3 = convergence_study(m, SplineFamily::N3, ts);
  const double n3_last = n3.reports.back().achieved.to_double();
  o.require(within_rel(n3_last, 60, kConvergenceRelTol), "n3 peak " + fmt(n3_last) + " vs 60");

  const Rational t = ts.back();
  const SplineWitness w = build_n3(m, t);
  const double c_t3 = (w.coefficient("c") * t.pow(3)).to_double();
  const double d_t3 = (w.coefficient("d") * t.pow(3)).to_double();
  o.require(within_rel(c_t3, 8, kConvergenceRelTol),
            "c(t)t^3 = " + fmt(c_t3) + " vs 8; the solved system tends to 3(delta_0 - delta_1) = " +
                (Rational(3) * (delta(m, 0) - delta(m, 1))).str());
  o.require(within_rel(d_t3, -6, kConvergenceRelTol), "d(t)t^3 = " + fmt(d_t3) + " vs -6");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Polynomial p = hilbert_interpolant(mv({1, 2, 3}));
  o.require(p == Polynomial({27, -192, 210}), "interpolant is " + p.str());
  o.require(p.derivative().derivative() == Polynomial::constant(Rational(420)), "second derivative != 420");
  o.require(Rational(420) == Rational(60) * delta(mv({1, 2, 3}), 0), "420 != 60 delta_0");
  const auto e = interpolant_derivative_range(p);
  o.require(e.min.lo == Rational(-192) && e.max.hi == Rational(228), "derivative range differs from [-192, 228]");
  o.require(e.min.hi <= Rational(-24) && Rational(60) <= e.max.lo, "[-24, 60] not inside derivative range");

  RationalGen gen(kSeed + 3);
  for (int i = 0; i < 50; ++i) {
    const MomentVector m = gen.moments(3);
    const Polynomial cubic = hilbert_interpolant(m);
    const Polynomial slope = cubic.derivative();
    if (slope.degree() < 1) continue;
    // Second-derivative range of the cubic as an enclosure of p'' = (p')'.
    const auto enc = derivative_extremes(slope, Rational(0), Rational(1), Rational::pow2(-40));
    o.require(enc.min.width().to_double() <= kEnclosureWidthTol && enc.max.width().to_double() <= kEnclosureWidthTol,
              "enclosure too wide");
    const auto uv = second_derivative_values(m);
    for (std::size_t k = 2; k <= 3; ++k)
      o.require(enc.min.lo <= uv.at(k) && uv.at(k) <= enc.max.hi,
                "second-derivative value k=" + std::to_string(k) + " outside range for " + serialize_moments(m));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "-m", "1,2,3"},
      {"analyze", "-m", "5"},
      {"witness", "-m", "1,1,2", "--family", "left-quad", "--t", "1/10", "--samples", "101"},
      {"witness", "-m", "1,1,2", "--family", "symmetric", "--t", "1/4", "--format", "csv", "--exact"},
      {"witness", "-m", "0,0,1,1", "--family", "n3", "--t", "1/8", "--format", "json"},
      {"converge", "-m", "1,1,2", "--family", "left-quad"},
      {"converge", "-m", "0,0,1,1", "--family", "n3"},
      {"maximize", "-n", "6"},
      {"verify", "-m", "1,2,3,4"},
      {"corollary-table"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(cmd, out1, err1);
    const int c2 = cli::run(cmd, out2, err2);
    o.require(c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str(), "output differs for " + cmd.front());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact certificate values", criterion1},
      {"arithmetic-progression regression n=2..12", criterion2},
      {"extremal spread n=2,3 vs vertex enumeration", criterion3},
      {"identity suite on 200 random vectors", criterion4},
      {"functionals vs direct integration", criterion5},
      {"witness exactness", criterion6},
      {"sharpness convergence", criterion7},
      {"Hilbert interpolant", criterion8},
      {"CLI determinism", criterion9},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const bool known = kKnownUnattainable.count(id) > 0;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first;
    if (!o.passed && known) std::cout << " [known unattainable]";
    if (o.passed && known) std::cout << " [expected FAIL; update kKnownUnattainable]";
    std::cout << "\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    if (o.passed == known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
