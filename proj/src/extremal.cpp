#include "momentrange/extremal.hpp"

#include "momentrange/bernstein.hpp"
#include "momentrange/certificate.hpp"
#include "momentrange/errors.hpp"

namespace momentrange {

namespace {

// True when `a` has +1 at the first entry where the two sign vectors differ.
bool prefer_vertex(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

}  // namespace

ExtremalResult maximize_spread(std::size_t n) {
  if (n < 2) throw DegreeTooSmall("spread maximization needs n >= 2 (a single functional has zero spread)");

  std::vector<std::vector<Rational>> weights;
  for (std::size_t k = 1; k <= n; ++k) weights.push_back(d_weights(k, n));

  bool have = false;
  Rational best;
  std::vector<int> best_vertex;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      Rational value;
      std::vector<int> vertex(n + 1);
      for (std::size_t c = 0; c <= n; ++c) {
        const Rational coef = weights[i - 1][c] - weights[j - 1][c];
        vertex[c] = coef.sign() < 0 ? -1 : 1;
        value += coef.abs();
      }
      const bool better = !have || value > best || (value == best && prefer_vertex(vertex, best_vertex));
      if (better) {
        have = true;
        best = value;
        best_vertex = std::move(vertex);
        best_i = i;
        best_j = j;
      }
    }
  }

  std::vector<Rational> alphas;
  for (int s : best_vertex) alphas.emplace_back(s);
  ExtremalResult result{n, best, MomentVector(std::move(alphas)), best_i, best_j};

  const RangeCertificate cert = certificate(result.argmax);
  if (d_value(result.argmax, best_i) - d_value(result.argmax, best_j) != best || *cert.B - *cert.A != best)
    throw InternalConsistencyError("extremal vertex does not reproduce the maximal spread");
  return result;
}

MomentVector alternating_vertex(std::size_t n) {
  std::vector<Rational> alphas;
  for (std::size_t k = 0; k <= n; ++k) alphas.emplace_back(k % 2 == 0 ? 1 : -1);
  return MomentVector(std::move(alphas));
}

std::vector<AlternatingRow> alternating_conjecture_check(std::size_t n_max) {
  if (n_max < 2) throw DegreeTooSmall("alternating check needs n_max >= 2");
  std::vector<AlternatingRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const RangeCertificate cert = certificate(alternating_vertex(n));
    AlternatingRow row{n, *cert.B - *cert.A, maximize_spread(n).max_width, false};
    row.attains = row.alternating_width == row.max_width;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace momentrange
