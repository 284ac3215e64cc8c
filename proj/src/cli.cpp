#include "momentrange/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "momentrange/errors.hpp"
#include "momentrange/report.hpp"

namespace momentrange::cli {

namespace {

struct Config {
  std::string moments;
  std::string family = "left-quad";
  std::string t_spec;
  std::size_t samples = 101;
  std::string format;
  std::string output;
  bool exact = false;
  std::size_t n = 0;
  std::size_t n_max = 12;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::optional<std::size_t> max_bits_from_env() {
  const char* raw = std::getenv("MOMENT_RANGE_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw UsageError("MOMENT_RANGE_MAX_BITS must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

void check_bits(const Rational& r, const char* what) {
  const std::optional<std::size_t> limit = max_bits_from_env();
  if (limit && r.bit_size() > *limit)
    throw UsageError(std::string(what) + " needs " + std::to_string(r.bit_size()) +
                     " bits, above MOMENT_RANGE_MAX_BITS=" + std::to_string(*limit));
}

MomentVector load_moments(const Config& cfg) {
  if (cfg.moments.empty()) throw UsageError("--moments is required");
  MomentVector m = parse_moments(cfg.moments);
  for (const auto& a : m.alphas()) check_bits(a, "moment");
  return m;
}

// "geom:start:count", a single rational, or a comma-separated list.
std::vector<Rational> parse_t_spec(const std::string& spec) {
  std::vector<Rational> ts;
  if (spec.rfind("geom:", 0) == 0) {
    const std::string rest = spec.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("t sequence must look like geom:start:count");
    const Rational start = Rational::parse(rest.substr(0, colon));
    const std::string count_text = rest.substr(colon + 1);
    if (count_text.empty() || count_text.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("geometric sequence count must be a positive integer");
    const auto count = static_cast<std::size_t>(std::stoul(count_text));
    if (count == 0) throw UsageError("geometric sequence count must be a positive integer");
    ts = geometric_sequence(start, count);
  } else {
    ts = parse_moments(spec).alphas();
  }
  for (const auto& t : ts) check_bits(t, "t");
  return ts;
}

std::string line(const std::string& key, const Rational& v) {
  return key + " = " + v.str() + " (" + v.decimal() + ")\n";
}

int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err) {
  const MomentVector m = load_moments(cfg);
  const Json report = analyze_report(m);
  if (cfg.format == "text") {
    out << "n = " << m.degree() << "\nstatus = " << report["status"].get<std::string>() << "\n";
    if (report["A"].is_string()) {
      out << "A = " << report["A"].get<std::string>() << " (k=" << report["argmin_k"] << ")\n";
      out << "B = " << report["B"].get<std::string>() << " (k=" << report["argmax_k"] << ")\n";
    }
    if (report.contains("classification"))
      out << "case = " << report["classification"]["case"].get<std::string>() << "\n";
    for (const auto& note : report["notes"]) out << "note: " << note.get<std::string>() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  if (m.degree() == 0) {
    err << "no universal bound exists for a single moment\n";
    return kDegenerate;
  }
  return kSuccess;
}

int cmd_witness(const Config& cfg, std::ostream& out) {
  const MomentVector m = load_moments(cfg);
  const SplineFamily family = parse_family(cfg.family);
  if (cfg.t_spec.empty()) throw UsageError("--t is required");
  const Rational t = Rational::parse(cfg.t_spec);
  check_bits(t, "t");

  const SplineWitness w = build_witness(family, m, t);

  const std::vector<SampleRow> rows = cfg.samples >= 2 ? sample(w.spline, cfg.samples) : std::vector<SampleRow>{};
  if (cfg.format == "json") {
    out << witness_report(w, m, cfg.samples).dump(2) << "\n";
    return kSuccess;
  }
  const std::string csv = samples_csv(rows, cfg.exact);
  if (cfg.format != "csv") {
    const DerivativeRange range = derivative_range(w.spline);
    out << "# family = " << to_string(family) << "\n# t = " << t << "\n";
    for (const auto& [name, value] : w.coefficients) out << "# " << line(name, value);
    out << "# " << line("derivative_min", range.min) << "# " << line("derivative_max", range.max)
        << "# " << line("width", range.max - range.min)
        << "# " << line("predicted_bound", predicted_bound(family, m));
  }
  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.output);
    file << csv;
  } else if (!rows.empty()) {
    out << csv;
  }
  return kSuccess;
}

int cmd_converge(const Config& cfg, std::ostream& out, std::ostream& err) {
  const MomentVector m = load_moments(cfg);
  const SplineFamily family = parse_family(cfg.family);
  const std::vector<Rational> ts = parse_t_spec(cfg.t_spec.empty() ? "geom:1/8:8" : cfg.t_spec);
  const ConvergenceStudy study = convergence_study(m, family, ts);

  if (cfg.format == "json") {
    out << to_json(study).dump(2) << "\n";
  } else {
    const bool n3 = family == SplineFamily::N3;
    out << "t,achieved,predicted,error" << (n3 ? ",c_t3,d_t3" : "") << "\n";
    for (const auto& r : study.reports) {
      out << r.t << "," << r.achieved.decimal() << "," << r.predicted_bound << "," << r.error.decimal();
      if (n3) {
        const Rational t3 = r.t.pow(3);
        out << "," << (r.coefficients[2].second * t3).decimal() << "," << (r.coefficients[3].second * t3).decimal();
      }
      out << "\n";
    }
    for (const auto& t : study.skipped) out << "# skipped degenerate t = " << t << "\n";
    out << "# decay criterion: " << (study.passed() ? "PASS" : "FAIL")
        << " (non_increasing=" << (study.non_increasing ? "yes" : "no")
        << ", halved=" << (study.halved ? "yes" : "no") << ")\n";
  }
  if (study.reports.empty()) {
    err << "every t in the sequence was degenerate\n";
    return kDegenerate;
  }
  return kSuccess;
}

int cmd_maximize(const Config& cfg, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("maximize needs -n >= 2; a single functional has zero spread");
  const ExtremalResult r = maximize_spread(cfg.n);
  if (cfg.format == "text") {
    out << "n = " << r.n << "\nmax_width = " << r.max_width << "\nargmax = " << serialize_moments(r.argmax)
        << "\npair = (" << r.k_max << ", " << r.k_min << ")\n";
  } else {
    out << to_json(r).dump(2) << "\n";
  }
  return kSuccess;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const MomentVector m = load_moments(cfg);
  if (m.degree() < 2) throw UsageError("verify needs at least three moments");
  const auto results = verify_identities(m);
  std::size_t failures = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    if (!r.passed) ++failures;
  }
  const RangeCertificate cert = certificate(m);
  out << "certificate " << to_string(cert.status) << " [" << *cert.A << ", " << *cert.B << "]\n";
  out << results.size() - failures << "/" << results.size() << " identities hold\n";
  return failures == 0 ? kSuccess : kIdentityViolation;
}

int cmd_corollary_table(const Config& cfg, std::ostream& out) {
  if (cfg.n_max < 2) throw UsageError("corollary-table needs --n-max >= 2");
  bool all_match = true;
  Json rows = Json::array();
  if (cfg.format != "json") out << "n,A,B,expected_A,expected_B,match\n";
  for (std::size_t n = 2; n <= cfg.n_max; ++n) {
    std::vector<Rational> alphas;
    for (std::size_t k = 0; k <= n; ++k) alphas.emplace_back(static_cast<long>(k + 1));
    const RangeCertificate cert = certificate(MomentVector(std::move(alphas)));
    const long nn = static_cast<long>(n);
    const Rational expected_a(-nn * (nn + 1) * (nn + 2));
    const Rational expected_b((nn + 1) * (nn + 2) * (2 * nn + 1));
    const bool match = *cert.A == expected_a && *cert.B == expected_b;
    all_match = all_match && match;
    if (cfg.format == "json") {
      rows.push_back({{"n", n}, {"A", to_json(*cert.A)}, {"B", to_json(*cert.B)},
                      {"expected_A", to_json(expected_a)}, {"expected_B", to_json(expected_b)}, {"match", match}});
    } else {
      out << n << "," << *cert.A << "," << *cert.B << "," << expected_a << "," << expected_b << ","
          << (match ? "yes" : "no") << "\n";
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << "\n";
  return all_match ? kSuccess : kIdentityViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified derivative ranges from Hausdorff moments", "momentrange"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_moments = [&](CLI::App* sub) {
    sub->add_option("-m,--moments", cfg.moments, "comma-separated rational literals, e.g. 1,2,3 or 1/2,0.25")
        ->required();
  };
  auto add_format = [&](CLI::App* sub, const char* fallback) {
    sub->add_option("--format", cfg.format, std::string("output format (default ") + fallback + ")")
        ->check(CLI::IsMember(formats));
  };

  auto* analyze = app.add_subcommand("analyze", "derivative-range certificate and supporting quantities");
  add_moments(analyze);
  add_format(analyze, "json");

  auto* witness = app.add_subcommand("witness", "build a spline witness and sample it");
  add_moments(witness);
  witness->add_option("--family", cfg.family, "left-quad, symmetric or n3")
      ->check(CLI::IsMember({"left-quad", "symmetric", "n3"}));
  witness->add_option("--t", cfg.t_spec, "spline parameter t (rational literal)")->required();
  witness->add_option("--samples", cfg.samples, "number of sample rows (0 disables)");
  witness->add_option("-o,--output", cfg.output, "write the CSV table to this file");
  witness->add_flag("--exact", cfg.exact, "add exact p/q columns to the CSV");
  add_format(witness, "text");

  auto* converge = app.add_subcommand("converge", "track a spline family toward its bound as t -> 0");
  add_moments(converge);
  converge->add_option("--family", cfg.family, "left-quad, symmetric or n3")
      ->check(CLI::IsMember({"left-quad", "symmetric", "n3"}));
  converge->add_option("--t", cfg.t_spec, "geom:start:count or comma-separated t values (default geom:1/8:8)");
  add_format(converge, "text");

  auto* maximize = app.add_subcommand("maximize", "largest certificate width over moments in [-1,1]");
  maximize->add_option("-n", cfg.n, "highest moment index")->required();
  add_format(maximize, "json");

  auto* verify = app.add_subcommand("verify", "check every exact identity for a moment vector");
  add_moments(verify);

  auto* corollary = app.add_subcommand("corollary-table", "certificates for alpha_k = k + 1 against closed forms");
  corollary->add_option("--n-max", cfg.n_max, "largest n (default 12)");
  add_format(corollary, "text");

  std::vector<const char*> argv{"momentrange"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out, err);
    if (*witness) return cmd_witness(cfg, out);
    if (*converge) return cmd_converge(cfg, out, err);
    if (*maximize) return cmd_maximize(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*corollary) return cmd_corollary_table(cfg, out);
  } catch (const DegenerateT& e) {
    err << e.what() << "\n";
    return kDegenerate;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kIdentityViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace momentrange::cli
