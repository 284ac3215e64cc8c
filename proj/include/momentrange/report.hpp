#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "momentrange/bernstein.hpp"
#include "momentrange/certificate.hpp"
#include "momentrange/extremal.hpp"
#include "momentrange/identities.hpp"
#include "momentrange/moments.hpp"
#include "momentrange/spline.hpp"

namespace momentrange {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; "approx" members are plotting aids only.
Json to_json(const Rational& r);
Json to_json(const MomentVector& m);  // {"alphas": [...]}
MomentVector moments_from_json(const Json& j);
Json to_json(const FunctionalTable& t);  // {"n": 3, "D": {"1": ..., ...}}
Json to_json(const SecondDerivativeTable& t);
Json to_json(const CaseClassification& c);
Json to_json(const ExtremalResult& r);
Json to_json(const WitnessReport& r);
Json to_json(const ConvergenceStudy& s);

/// Full analysis: certificate fields at the top level followed by deltas,
/// functionals, classification, bounds and annotations.
Json analyze_report(const MomentVector& m);

Json witness_report(const SplineWitness& w, const MomentVector& m, std::size_t samples);

/// "x,s,ds" header; with `exact`, also "x_exact,s_exact,ds_exact" columns.
std::string samples_csv(const std::vector<SampleRow>& rows, bool exact);

}  // namespace momentrange
