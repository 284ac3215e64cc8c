#include "momentrange/moments.hpp"

#include <utility>

#include "momentrange/errors.hpp"
#include "momentrange/linear_algebra.hpp"
#include "momentrange/polynomial.hpp"

namespace momentrange {

MomentVector::MomentVector(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw Error("a moment vector needs at least one moment");
}

MomentVector MomentVector::truncated(std::size_t new_degree) const {
  if (new_degree > degree()) throw IndexOutOfRange("cannot truncate to a higher degree");
  return MomentVector(std::vector<Rational>(alphas_.begin(), alphas_.begin() + static_cast<long>(new_degree) + 1));
}

MomentVector moments_of(const Polynomial& p, std::size_t degree) {
  std::vector<Rational> a;
  a.reserve(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) a.push_back(poly_moment_integral(p, k, Rational(0), Rational(1)));
  return MomentVector(std::move(a));
}

Rational delta(const MomentVector& m, std::size_t k) {
  if (k + 2 > m.degree()) throw IndexOutOfRange("delta index needs k + 2 <= n");
  const long j = static_cast<long>(k);
  return Rational((j + 3) * (j + 4), 2) * m[k + 2] - Rational((j + 2) * (j + 3)) * m[k + 1] +
         Rational((j + 1) * (j + 2), 2) * m[k];
}

std::vector<Rational> delta_sequence(const MomentVector& m) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k + 2 <= m.degree(); ++k) out.push_back(delta(m, k));
  return out;
}

MomentVector reflect(const MomentVector& m) {
  std::vector<Rational> out(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const Rational term = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * m[j];
      if (j % 2 == 0) out[k] += term; else out[k] -= term;
    }
  }
  return MomentVector(std::move(out));
}

MomentVector negate(const MomentVector& m) {
  std::vector<Rational> out;
  out.reserve(m.size());
  for (const auto& a : m.alphas()) out.push_back(-a);
  return MomentVector(std::move(out));
}

LinearConsistency linear_consistency(const MomentVector& m) {
  const std::size_t n = m.degree();
  if (n < 1) throw DegreeTooSmall("linear consistency needs at least two moments");

  // Rows (1/(k+1), 1/(k+2), alpha_k); the first two columns always have rank 2.
  Matrix augmented(n + 1, 3);
  for (std::size_t k = 0; k <= n; ++k) {
    augmented(k, 0) = Rational(1, static_cast<long>(k + 1));
    augmented(k, 1) = Rational(1, static_cast<long>(k + 2));
    augmented(k, 2) = m[k];
  }
  const bool rank_says_linear = rank_exact(augmented) == 2;

  if (n >= 2) {
    bool all_zero = true;
    for (const auto& d : delta_sequence(m)) all_zero = all_zero && d.is_zero();
    if (all_zero != rank_says_linear)
      throw InternalConsistencyError("rank test and delta test disagree on linear consistency");
  }

  LinearConsistency result;
  result.is_linear = rank_says_linear;
  if (rank_says_linear) {
    // u + v/2 = alpha_0, u/2 + v/3 = alpha_1.
    const auto uv = solve_linear_exact(LinearSystem(
        Matrix{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}}, {m[0], m[1]}));
    result.coeffs = LinearFit{uv[0], uv[1]};
  }
  return result;
}

MomentVector parse_moments(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t b = pos;
    std::size_t e = end;
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' || text[e - 1] == '\n')) --e;
    if (b == e) throw ParseError("empty moment entry", b);
    try {
      out.push_back(Rational::parse(text.substr(b, e - b)));
    } catch (const ParseError& err) {
      throw ParseError("invalid moment literal '" + std::string(text.substr(b, e - b)) + "'", b + err.position());
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return MomentVector(std::move(out));
}

std::string serialize_moments(const MomentVector& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k != 0) out += ',';
    out += m[k].str();
  }
  return out;
}

}  // namespace momentrange
