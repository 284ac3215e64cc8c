#include "momentrange/identities.hpp"

#include <functional>

#include "momentrange/bernstein.hpp"
#include "momentrange/certificate.hpp"
#include "momentrange/errors.hpp"
#include "momentrange/spline.hpp"

namespace momentrange {

namespace {

class Collector {
 public:
  void equal(std::string name, const Rational& lhs, const Rational& rhs) {
    IdentityResult r{std::move(name), lhs == rhs, {}};
    if (!r.passed) r.detail = lhs.str() + " != " + rhs.str();
    results_.push_back(std::move(r));
  }

  void holds(std::string name, bool ok, std::string detail = {}) {
    results_.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }

  // Runs a check that may throw InternalConsistencyError.
  void guarded(std::string name, const std::function<void()>& body) {
    try {
      body();
      holds(std::move(name), true);
    } catch (const InternalConsistencyError& e) {
      holds(std::move(name), false, e.what());
    }
  }

  std::vector<IdentityResult> take() { return std::move(results_); }

 private:
  std::vector<IdentityResult> results_;
};

std::string k_label(const char* base, std::size_t k) { return std::string(base) + "[k=" + std::to_string(k) + "]"; }

}  // namespace

std::vector<IdentityResult> verify_identities(const MomentVector& m) {
  const std::size_t n = m.degree();
  if (n < 2) throw DegreeTooSmall("identity verification needs at least three moments");
  Collector c;

  for (std::size_t k = 0; k + 2 <= n; ++k) {
    const auto [lhs, rhs] = connection_check(m, k);
    c.equal(k_label("connection", k), lhs, rhs);
  }
  c.equal("connection2", d_diag_via_deltas(m), d_value(m, n));
  for (std::size_t k = 1; k <= n; ++k) {
    const auto [lhs, rhs] = monomial_identity_check(m, k);
    c.equal(k_label("monomial", k), lhs, rhs);
  }
  for (std::size_t j = n; j >= 2; --j) {
    const FunctionalTable projected = convexity_project(d_table(m.truncated(j)));
    c.holds("convexity[n=" + std::to_string(j - 1) + "]", projected.values == d_table(m.truncated(j - 1)).values);
  }
  for (std::size_t j = 3; j <= n; ++j) c.holds("nesting[n=" + std::to_string(j) + "]", nesting_check(m.truncated(j)));

  for (std::size_t k = 1; k <= n; ++k)
    c.equal(k_label("beta_norm", k), beta_norm(k, n),
            poly_moment_integral(bernstein_poly(k, n + 1), 0, Rational(0), Rational(1)) /
                binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)));

  // Mean-value functionals of an actual function with these moments.
  const Polynomial f = hilbert_interpolant(m);
  for (std::size_t k = 1; k <= n; ++k) {
    const Polynomial weight_slope = bernstein_poly(k, n + 1).derivative();
    const Rational direct = -Rational(static_cast<long>(n + 2)) *
                            poly_moment_integral(f * weight_slope, 0, Rational(0), Rational(1));
    c.equal(k_label("integral_definition", k), d_value(m, k), direct);
  }

  const MomentVector g = reflect(m);
  const MomentVector neg = negate(m);
  c.holds("reflect_involution", reflect(g) == m);
  c.equal("delta0_reflection_invariant", delta(g, 0), delta(m, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    c.equal(k_label("reflection_duality", k), d_value(g, k), -d_value(m, n + 1 - k));
    c.equal(k_label("negation_duality", k), d_value(neg, k), -d_value(m, k));
  }
  for (std::size_t k = 0; k + 2 <= n; ++k) c.equal(k_label("delta_negation", k), delta(neg, k), -delta(m, k));

  const RangeCertificate cert = certificate(m);
  const RangeCertificate cert_g = certificate(g);
  const RangeCertificate cert_neg = certificate(neg);
  c.holds("certificate_reflection", *cert_g.A == -*cert.B && *cert_g.B == -*cert.A);
  c.holds("certificate_negation", *cert_neg.A == -*cert.B && *cert_neg.B == -*cert.A);
  const FunctionalTable table = d_table(m);
  bool inside = true;
  for (const auto& v : table.values) inside = inside && *cert.A <= v && v <= *cert.B;
  c.holds("certificate_hull", inside);
  c.guarded("linear_iff_degenerate", [&] {
    const bool linear = linear_consistency(m).is_linear;
    if (linear != (cert.status == CertificateStatus::Degenerate))
      throw InternalConsistencyError("linear consistency and degenerate certificate disagree");
  });

  if (n == 2) {
    c.guarded("classification_matches_certificate", [&] { classify_n2(m); });
  }
  if (n == 3) {
    c.guarded("classification_matches_certificate", [&] { classify_n3(m); });
    const MomentVector two = m.truncated(2);
    const Rational A = d_value(two, 1);
    const Rational B = d_value(two, 2);
    const Rational E = d_value(m, 1);
    const Rational D = d_value(m, 2);
    const Rational C = d_value(m, 3);
    c.equal("convex_combination_A", A, Rational(2, 5) * D + Rational(3, 5) * E);
    c.equal("convex_combination_B", B, Rational(3, 5) * C + Rational(2, 5) * D);
    c.holds("delta1_reflection_sign", (delta(m, 1) <= Rational(0)) == (delta(g, 0) <= delta(g, 1)));
    c.holds("reflection_swaps_C_E", d_value(g, 3) == -E && d_value(g, 1) == -C && d_value(g, 2) == -D);
  }

  const SecondDerivativeTable second = second_derivative_values(m);
  if (n == 2) c.equal("second_derivative_60_delta0", second.at(2), Rational(60) * delta(m, 0));
  if (n == 3) {
    c.equal("second_derivative_V",
            second.at(2), Rational(120) * (m[0] - Rational(9) * m[1] + Rational(18) * m[2] - Rational(10) * m[3]));
    c.equal("second_derivative_U",
            second.at(3), Rational(120) * (Rational(3) * m[1] - Rational(12) * m[2] + Rational(10) * m[3]));
  }
  // Each second-derivative value is f''(c) for the interpolant f too.
  const Polynomial slope = f.derivative();
  if (slope.degree() >= 1) {
    const DerivativeEnclosure range = interpolant_derivative_range(slope);
    for (std::size_t k = 2; k <= n; ++k)
      c.holds(k_label("second_derivative_in_range", k),
              range.min.lo <= second.at(k) && second.at(k) <= range.max.hi, second.at(k).str());
  } else {
    for (std::size_t k = 2; k <= n; ++k)
      c.equal(k_label("second_derivative_in_range", k), second.at(k), Rational(0));
  }
  return c.take();
}

}  // namespace momentrange
