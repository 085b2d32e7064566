#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circk/circular.hpp"
#include "circk/gadgets.hpp"
#include "circk/ktree.hpp"

namespace circk {

struct ProofStep {
  RootedPartialKTree replaced;  // gadget glued onto the second split part
  SplitResult parts;
  std::size_t gadget = 0;
  // The first part's roots were reordered to parts.first.roots[permutation[i]].
  std::vector<int> permutation;
};

// One replacement step on a certified graph that is not (p,q)-colorable:
// split it with parameter n, then swap the first part for a table gadget
// whose F-set is inside the part's and whose type dominates the part's.
// Throws PreconditionFailed unless |V| >= 3n, n >= k+1, n >= every gadget's
// order, 2n < odd girth, odd girth >= 3 * max gadget order and g is not
// colorable. Returns nullopt when no gadget qualifies. Throws LemmaViolation
// when the first part has an odd cycle or the result is smaller, colorable
// or of lower odd girth than required.
std::optional<ProofStep> proof_step(const RootedPartialKTree& g, const PQParams& pq, int n, const GadgetTable& table);

}  // namespace circk
