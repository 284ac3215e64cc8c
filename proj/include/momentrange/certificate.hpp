#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentrange/moments.hpp"
#include "momentrange/rational.hpp"

namespace momentrange {

enum class CertificateStatus { NoCertificate, Degenerate, Interval };

/// An interval [A, B] contained in the range of f' for every C^1 function f
/// with the given moments.
struct RangeCertificate {
  std::size_t n = 0;
  CertificateStatus status = CertificateStatus::NoCertificate;
  std::optional<Rational> A;
  std::optional<Rational> B;
  std::size_t argmin_k = 0;  // 0 when absent
  std::size_t argmax_k = 0;
};

enum class BoundStatus { ProvenSharp, Conjectured };

struct CaseClassification {
  std::string case_id;
  Rational A;
  Rational B;
  BoundStatus A_status = BoundStatus::Conjectured;
  BoundStatus B_status = BoundStatus::Conjectured;
  /// Every table row whose hypothesis holds; case_id is the first.
  std::vector<std::string> matching_rows;
};

const char* to_string(CertificateStatus s);
const char* to_string(BoundStatus s);

RangeCertificate certificate(const MomentVector& m);

/// Three moments. Throws WrongDegree otherwise.
CaseClassification classify_n2(const MomentVector& m);

/// Four moments, six-row table keyed on the signs and order of delta_0 and
/// delta_1; overlaps on boundaries go to the lowest row. Throws WrongDegree.
CaseClassification classify_n3(const MomentVector& m);

/// (12|delta_0|, 32|delta_0|) bracketing the guaranteed interval length.
std::pair<Rational, Rational> problem2_bounds_n2(const MomentVector& m);

/// Whether the certificate of the vector truncated by one moment sits inside
/// this one. Requires n >= 3.
bool nesting_check(const MomentVector& m);

/// Note attached to proper intervals: every matching f has a derivative range
/// strictly longer than B - A.
std::optional<std::string> strictness_annotation(const RangeCertificate& cert);

}  // namespace momentrange
