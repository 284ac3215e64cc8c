#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "momentrange/bernstein.hpp"
#include "momentrange/certificate.hpp"
#include "momentrange/cli.hpp"
#include "momentrange/errors.hpp"
#include "momentrange/extremal.hpp"
#include "momentrange/identities.hpp"
#include "momentrange/report.hpp"
#include "momentrange/spline.hpp"

namespace py = pybind11;
using namespace momentrange;

// Rational <-> fractions.Fraction. Anything Fraction() accepts converts in
// (int, str, Fraction, float); values always come back out as Fraction.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || src.is_none()) return false;
    try {
      const object frac = module_::import("fractions").attr("Fraction")(src);
      value = Rational::parse(py::str(frac).cast<std::string>());
      return true;
    } catch (const error_already_set&) {
      return false;
    } catch (const ParseError&) {
      return false;
    }
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    return module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

MomentVector to_moments(const std::vector<Rational>& alphas) { return MomentVector(alphas); }

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict certificate_dict(const RangeCertificate& c) {
  py::dict d;
  d["n"] = c.n;
  d["status"] = to_string(c.status);
  d["A"] = c.A ? py::cast(*c.A) : py::none();
  d["B"] = c.B ? py::cast(*c.B) : py::none();
  d["argmin_k"] = c.argmin_k ? py::cast(c.argmin_k) : py::none();
  d["argmax_k"] = c.argmax_k ? py::cast(c.argmax_k) : py::none();
  return d;
}

py::dict witness_dict(const SplineWitness& w) {
  py::dict d;
  d["family"] = to_string(w.family);
  d["t"] = w.t;
  py::dict coefs;
  for (const auto& [name, v] : w.coefficients) coefs[py::str(name)] = v;
  d["coefficients"] = coefs;
  d["breakpoints"] = w.spline.breakpoints();
  py::list pieces;
  for (const auto& p : w.spline.pieces()) pieces.append(py::cast(p.coeffs()));
  d["pieces"] = pieces;
  const DerivativeRange r = derivative_range(w.spline);
  d["derivative_range"] = py::make_tuple(r.min, r.max);
  return d;
}

}  // namespace

PYBIND11_MODULE(_momentrange, m) {
  m.doc() = "Exact derivative-range certificates from Hausdorff moments.";

  py::register_exception<Error>(m, "MomentRangeError", PyExc_ValueError);

  m.def("delta", [](const std::vector<Rational>& a, std::size_t k) { return delta(to_moments(a), k); },
        py::arg("alphas"), py::arg("k"));
  m.def("reflect", [](const std::vector<Rational>& a) { return reflect(to_moments(a)).alphas(); }, py::arg("alphas"));
  m.def("d_table", [](const std::vector<Rational>& a) { return d_table(to_moments(a)).values; }, py::arg("alphas"),
        "D_{k,n} for k = 1..n, as a list.");
  m.def("certificate", [](const std::vector<Rational>& a) { return certificate_dict(certificate(to_moments(a))); },
        py::arg("alphas"));
  m.def("analyze", [](const std::vector<Rational>& a) { return from_json(analyze_report(to_moments(a))); },
        py::arg("alphas"), "Same document as the `analyze` command, as Python objects.");
  m.def("hilbert_interpolant", [](const std::vector<Rational>& a) { return hilbert_interpolant(to_moments(a)).coeffs(); },
        py::arg("alphas"), "Coefficients, lowest degree first.");
  m.def(
      "build_witness",
      [](const std::string& family, const std::vector<Rational>& a, const Rational& t) {
        return witness_dict(build_witness(parse_family(family), to_moments(a), t));
      },
      py::arg("family"), py::arg("alphas"), py::arg("t"));
  m.def(
      "maximize_spread",
      [](std::size_t n) {
        const ExtremalResult r = maximize_spread(n);
        py::dict d;
        d["n"] = r.n;
        d["max_width"] = r.max_width;
        d["argmax"] = r.argmax.alphas();
        d["pair"] = py::make_tuple(r.k_max, r.k_min);
        return d;
      },
      py::arg("n"));
  m.def(
      "verify_identities",
      [](const std::vector<Rational>& a) {
        py::list out;
        for (const auto& r : verify_identities(to_moments(a))) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("alphas"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
