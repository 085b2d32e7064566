#include "circk/proof_step.hpp"

#include <algorithm>
#include <numeric>

#include "circk/errors.hpp"
#include "circk/graph_io.hpp"
#include "circk/precolor.hpp"
#include "circk/type_matrix.hpp"

namespace circk {

namespace {

RootedPartialKTree permute_roots(const RootedPartialKTree& t, const std::vector<int>& perm) {
  RootedPartialKTree out = t;
  for (std::size_t i = 0; i < perm.size(); ++i) out.roots[i] = t.roots[perm[i]];
  // The certificate's initial clique is the root set, so only its order
  // changes; steps stay valid.
  return out;
}

}  // namespace

std::optional<ProofStep> proof_step(const RootedPartialKTree& g, const PQParams& pq, int n, const GadgetTable& table) {
  if (table.options.k != g.k) throw KMismatch("proof_step: table built for another k");
  if (table.options.pq != pq) throw PreconditionFailed("proof_step: table built for another (p,q)");
  if (Validation v = validate(g); !v) throw InvalidCertificate("proof_step: " + v.violation);
  const int vertices = g.vertex_count();
  const Length girth = odd_girth(g.graph);
  const int max_order = table.max_order();
  if (n < g.k + 1) throw PreconditionFailed("proof_step: n < k+1");
  if (vertices < 3 * n) throw PreconditionFailed("proof_step: fewer than 3n vertices");
  if (n < max_order) throw PreconditionFailed("proof_step: n below the largest gadget order");
  if (girth <= Length(2 * n)) throw PreconditionFailed("proof_step: odd girth at most 2n");
  if (girth < Length(3 * max_order)) throw PreconditionFailed("proof_step: odd girth below 3 * largest gadget order");
  if (is_pq_colorable(g, pq)) throw PreconditionFailed("proof_step: graph is colorable");

  ProofStep step;
  step.parts = split(g, n);
  if (!is_bipartite(step.parts.first.graph))
    throw LemmaViolation("proof_step: first part has an odd cycle\n" + format_graph_text(g));

  std::vector<int> perm(g.k + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const RootedPartialKTree first = permute_roots(step.parts.first, perm);
    const TypeMatrix type = type_of(first);
    const FSet f = f_set(first, pq);
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
      const Gadget& gadget = table.entries[i];
      if (!leq(type, gadget.type) || !gadget.fset.is_subset_of(f)) continue;
      step.gadget = i;
      step.permutation = perm;
      step.replaced = glue(gadget.tree, permute_roots(step.parts.second, perm));
      const std::string where = "\ninput:\n" + format_graph_text(g) + "gadget " + std::to_string(i) + "\n";
      if (step.replaced.vertex_count() >= vertices)
        throw LemmaViolation("proof_step: replacement did not shrink the graph" + where);
      if (is_pq_colorable(step.replaced, pq))
        throw LemmaViolation("proof_step: replacement is colorable" + where);
      if (odd_girth(step.replaced.graph) < girth)
        throw LemmaViolation("proof_step: replacement lowered the odd girth" + where);
      return step;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace circk
