#include "momentrange/certificate.hpp"

#include <array>

#include "momentrange/bernstein.hpp"
#include "momentrange/errors.hpp"

namespace momentrange {

const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::NoCertificate: return "NoCertificate";
    case CertificateStatus::Degenerate: return "Degenerate";
    case CertificateStatus::Interval: return "Interval";
  }
  return "?";
}

const char* to_string(BoundStatus s) { return s == BoundStatus::ProvenSharp ? "proven_sharp" : "conjectured"; }

RangeCertificate certificate(const MomentVector& m) {
  RangeCertificate cert;
  cert.n = m.degree();
  if (cert.n == 0) return cert;

  const FunctionalTable table = d_table(m);
  std::size_t lo = 1;
  std::size_t hi = 1;
  for (std::size_t k = 2; k <= table.n; ++k) {
    if (table.at(k) < table.at(lo)) lo = k;
    if (table.at(k) > table.at(hi)) hi = k;
  }
  cert.A = table.at(lo);
  cert.B = table.at(hi);
  cert.argmin_k = lo;
  cert.argmax_k = hi;

  if (cert.n == 1 && *cert.A != Rational(12) * m[1] - Rational(6) * m[0])
    throw InternalConsistencyError("two-moment certificate disagrees with 12 alpha_1 - 6 alpha_0");
  cert.status = *cert.A == *cert.B ? CertificateStatus::Degenerate : CertificateStatus::Interval;
  return cert;
}

CaseClassification classify_n2(const MomentVector& m) {
  if (m.degree() != 2) throw WrongDegree("n = 2 classification needs exactly three moments");
  const Rational d0 = delta(m, 0);
  const Rational first = Rational(12) * (Rational(4) * m[1] - m[0] - Rational(3) * m[2]);
  const Rational second = Rational(12) * (Rational(3) * m[2] - Rational(2) * m[1]);

  CaseClassification c;
  c.A_status = BoundStatus::ProvenSharp;
  c.B_status = BoundStatus::ProvenSharp;
  if (d0.sign() > 0) {
    c.case_id = "delta0_positive";
    c.A = first;
    c.B = second;
  } else if (d0.sign() < 0) {
    c.case_id = "delta0_negative";
    c.A = second;
    c.B = first;
  } else {
    c.case_id = "delta0_zero";
    c.A = second;
    c.B = second;
  }
  c.matching_rows = {c.case_id};

  const RangeCertificate cert = certificate(m);
  if (*cert.A != c.A || *cert.B != c.B)
    throw InternalConsistencyError("n = 2 classification disagrees with the certificate");
  return c;
}

CaseClassification classify_n3(const MomentVector& m) {
  if (m.degree() != 3) throw WrongDegree("n = 3 classification needs exactly four moments");
  const Rational d0 = delta(m, 0);
  const Rational d1 = delta(m, 1);
  const Rational zero;

  // Upper (C), middle (D) and lower-index (E) functionals.
  const Rational C = Rational(20) * (Rational(4) * m[3] - Rational(3) * m[2]);
  const Rational D = Rational(60) * (Rational(3) * m[2] - Rational(2) * m[3] - m[1]);
  const Rational E = Rational(20) * (Rational(4) * m[3] - Rational(9) * m[2] + Rational(6) * m[1] - m[0]);

  struct Row {
    const char* id;
    bool matches;
    const Rational* A;
    const Rational* B;
    BoundStatus A_status;
    BoundStatus B_status;
  };
  const auto P = BoundStatus::ProvenSharp;
  const auto Q = BoundStatus::Conjectured;
  const std::array<Row, 6> rows{{
      {"i", d0 >= zero && d1 <= zero, &E, &D, Q, P},
      {"ii", zero <= d0 && d0 <= d1, &D, &C, P, Q},
      {"iii", zero <= d1 && d1 <= d0, &E, &C, Q, Q},
      {"iv", d0 <= zero && d1 >= zero, &D, &E, P, Q},
      {"v", d1 <= d0 && d0 <= zero, &C, &D, Q, P},
      {"vi", d0 <= d1 && d1 <= zero, &C, &E, Q, Q},
  }};

  CaseClassification c;
  for (const Row& row : rows) {
    if (!row.matches) continue;
    if (c.matching_rows.empty()) {
      c.case_id = row.id;
      c.A = *row.A;
      c.B = *row.B;
      c.A_status = row.A_status;
      c.B_status = row.B_status;
    }
    c.matching_rows.emplace_back(row.id);
  }
  if (c.matching_rows.empty()) throw InternalConsistencyError("no classification row matched");

  if (d0.is_zero() && d1.is_zero()) {
    // Linear moments: A = B = C is attained exactly.
    c.A_status = BoundStatus::ProvenSharp;
    c.B_status = BoundStatus::ProvenSharp;
  }

  const RangeCertificate cert = certificate(m);
  if (*cert.A != c.A || *cert.B != c.B)
    throw InternalConsistencyError("n = 3 classification disagrees with the certificate");
  return c;
}

std::pair<Rational, Rational> problem2_bounds_n2(const MomentVector& m) {
  if (m.degree() != 2) throw WrongDegree("interval-length bounds need exactly three moments");
  const Rational d0 = delta(m, 0).abs();
  return {Rational(12) * d0, Rational(32) * d0};
}

bool nesting_check(const MomentVector& m) {
  if (m.degree() < 3) throw WrongDegree("nesting check needs n >= 3");
  const RangeCertificate inner = certificate(m.truncated(m.degree() - 1));
  const RangeCertificate outer = certificate(m);
  return *outer.A <= *inner.A && *inner.B <= *outer.B;
}

std::optional<std::string> strictness_annotation(const RangeCertificate& cert) {
  if (cert.status != CertificateStatus::Interval) return std::nullopt;
  return "every function with these moments has a derivative range strictly longer than B - A; "
         "B - A is a strict lower bound for the guaranteed interval length";
}

}  // namespace momentrange
