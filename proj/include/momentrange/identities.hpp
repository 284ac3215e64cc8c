#pragma once

#include <string>
#include <vector>

#include "momentrange/moments.hpp"

namespace momentrange {

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;  // both sides when the check fails
};

/// Every exact identity that applies to this moment vector: delta/D
/// connections, the telescoped diagonal, the monomial identity, convexity
/// projection, nesting, reflection and negation dualities, beta norms, the
/// n = 3 convex combinations and the second-derivative checks. Requires n >= 2.
std::vector<IdentityResult> verify_identities(const MomentVector& m);

}  // namespace momentrange
