#include "momentrange/report.hpp"

#include <sstream>

#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

Json labelled(const std::vector<Rational>& values, std::size_t first_label) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) obj[std::to_string(first_label + i)] = to_json(values[i]);
  return obj;
}

Json coefficients_json(const NamedCoefficients& coef) {
  Json obj = Json::object();
  for (const auto& [name, value] : coef) obj[name] = to_json(value);
  return obj;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const MomentVector& m) {
  Json arr = Json::array();
  for (const auto& a : m.alphas()) arr.push_back(a.str());
  return Json{{"alphas", arr}};
}

MomentVector moments_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alphas") || !j["alphas"].is_array())
    throw ParseError("expected an object with an \"alphas\" array", 0);
  std::vector<Rational> alphas;
  std::size_t index = 0;
  for (const auto& v : j["alphas"]) {
    if (!v.is_string()) throw ParseError("moment entries must be rational-literal strings", index);
    alphas.push_back(Rational::parse(v.get<std::string>()));
    ++index;
  }
  return MomentVector(std::move(alphas));
}

Json to_json(const FunctionalTable& t) { return Json{{"n", t.n}, {"D", labelled(t.values, 1)}}; }

Json to_json(const SecondDerivativeTable& t) { return Json{{"n", t.n}, {"values", labelled(t.values, 2)}}; }

Json to_json(const CaseClassification& c) {
  return Json{{"case", c.case_id},
              {"A", to_json(c.A)},
              {"B", to_json(c.B)},
              {"A_status", to_string(c.A_status)},
              {"B_status", to_string(c.B_status)},
              {"matching_rows", c.matching_rows}};
}

Json to_json(const ExtremalResult& r) {
  Json argmax = Json::array();
  for (const auto& a : r.argmax.alphas()) argmax.push_back(a.str());
  return Json{{"n", r.n}, {"max_width", to_json(r.max_width)}, {"argmax", argmax}, {"pair", {r.k_max, r.k_min}}};
}

Json to_json(const WitnessReport& r) {
  return Json{{"t", to_json(r.t)},
              {"coefficients", coefficients_json(r.coefficients)},
              {"derivative_min", to_json(r.derivative_min)},
              {"derivative_max", to_json(r.derivative_max)},
              {"achieved", to_json(r.achieved)},
              {"predicted_bound", to_json(r.predicted_bound)},
              {"error", to_json(r.error)},
              {"approx", {{"t", r.t.to_double()}, {"achieved", r.achieved.to_double()}, {"error", r.error.to_double()}}}};
}

Json to_json(const ConvergenceStudy& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  Json skipped = Json::array();
  for (const auto& t : s.skipped) skipped.push_back(t.str());
  return Json{{"family", to_string(s.family)},
              {"reports", reports},
              {"skipped", skipped},
              {"non_increasing", s.non_increasing},
              {"halved", s.halved},
              {"passed", s.passed()}};
}

Json analyze_report(const MomentVector& m) {
  const std::size_t n = m.degree();
  const RangeCertificate cert = certificate(m);
  Json out;
  out["n"] = n;
  out["status"] = to_string(cert.status);
  out["A"] = cert.A ? to_json(*cert.A) : Json(nullptr);
  out["B"] = cert.B ? to_json(*cert.B) : Json(nullptr);
  out["argmin_k"] = cert.A ? Json(cert.argmin_k) : Json(nullptr);
  out["argmax_k"] = cert.B ? Json(cert.argmax_k) : Json(nullptr);
  if (n == 2) out["classification"] = to_json(classify_n2(m));
  if (n == 3) out["classification"] = to_json(classify_n3(m));

  Json notes = Json::array();
  if (n == 0) notes.push_back("no universal bound exists for a single moment");
  if (cert.status == CertificateStatus::Degenerate) notes.push_back("moments of a linear function; the derivative range may be a single point");
  if (auto note = strictness_annotation(cert)) notes.push_back(*note);
  if (n == 2) notes.push_back("second-derivative entry k=2 equals 60*delta_0 for three moments");
  out["notes"] = notes;

  out["moments"] = to_json(m);
  out["deltas"] = labelled(delta_sequence(m), 0);
  if (n >= 1) out["functionals"] = to_json(d_table(m));
  if (n >= 2) out["second_derivative"] = to_json(second_derivative_values(m));
  if (n == 2) {
    const auto [lo, hi] = problem2_bounds_n2(m);
    out["interval_length_bounds"] = {{"lower", to_json(lo)}, {"upper", to_json(hi)}};
  }
  if (n >= 3) out["nesting"] = nesting_check(m);
  if (n >= 1) {
    const LinearConsistency lc = linear_consistency(m);
    Json j{{"is_linear", lc.is_linear}};
    if (lc.coeffs) {
      j["u"] = to_json(lc.coeffs->intercept);
      j["v"] = to_json(lc.coeffs->slope);
    }
    out["linear_consistency"] = j;
  }
  if (cert.A) out["approx"] = {{"A", cert.A->to_double()}, {"B", cert.B->to_double()}};
  return out;
}

Json witness_report(const SplineWitness& w, const MomentVector& m, std::size_t samples) {
  const DerivativeRange range = derivative_range(w.spline);
  Json pieces = Json::array();
  for (std::size_t i = 0; i < w.spline.pieces().size(); ++i) {
    pieces.push_back({{"from", to_json(w.spline.breakpoints()[i])},
                      {"to", to_json(w.spline.breakpoints()[i + 1])},
                      {"polynomial", w.spline.pieces()[i].str()}});
  }
  Json out{{"family", to_string(w.family)},
           {"t", to_json(w.t)},
           {"moments", to_json(m)},
           {"coefficients", coefficients_json(w.coefficients)},
           {"pieces", pieces},
           {"derivative_min", to_json(range.min)},
           {"derivative_max", to_json(range.max)},
           {"width", to_json(range.max - range.min)},
           {"predicted_bound", to_json(predicted_bound(w.family, m))},
           {"c1", c1_check(w.spline)}};
  if (samples >= 2) {
    Json rows = Json::array();
    for (const auto& row : sample(w.spline, samples))
      rows.push_back({to_json(row.x), to_json(row.value), to_json(row.slope)});
    out["samples"] = rows;
  }
  return out;
}

std::string samples_csv(const std::vector<SampleRow>& rows, bool exact) {
  std::ostringstream os;
  os << "x,s,ds";
  if (exact) os << ",x_exact,s_exact,ds_exact";
  os << "\n";
  for (const auto& r : rows) {
    os << r.x.decimal() << "," << r.value.decimal() << "," << r.slope.decimal();
    if (exact) os << "," << r.x << "," << r.value << "," << r.slope;
    os << "\n";
  }
  return os.str();
}

}  // namespace momentrange
