#pragma once

#include <cstddef>
#include <vector>

#include "momentrange/moments.hpp"
#include "momentrange/rational.hpp"

namespace momentrange {

/// Largest certificate width B_n - A_n over moment vectors in [-1, 1]^{n+1}.
struct ExtremalResult {
  std::size_t n = 0;
  Rational max_width;
  MomentVector argmax{std::vector<Rational>{Rational(1)}};
  std::size_t k_max = 0;
  std::size_t k_min = 0;
};

/// Each D_i - D_j is linear in the moments, so its maximum over the cube is
/// the sum of absolute coefficients, attained at the sign vertex (+1 where a
/// coefficient vanishes). Ties prefer the vertex with +1 at the first
/// differing entry, then the smallest (k_max, k_min). Throws DegreeTooSmall
/// for n < 2.
ExtremalResult maximize_spread(std::size_t n);

/// (1, -1, 1, ...) of length n + 1.
MomentVector alternating_vertex(std::size_t n);

struct AlternatingRow {
  std::size_t n = 0;
  Rational alternating_width;
  Rational max_width;
  bool attains = false;
};

/// For n = 2..n_max: does the alternating vertex reach the maximum spread?
std::vector<AlternatingRow> alternating_conjecture_check(std::size_t n_max);

}  // namespace momentrange
