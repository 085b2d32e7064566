#pragma once

#include <cstdint>

#include "circk/ktree.hpp"
#include "circk/length.hpp"
#include "circk/type_matrix.hpp"

namespace circk {

// Random k-tree (each new vertex attaches to a uniformly chosen k-subset of a
// uniformly chosen existing (k+1)-clique), then each edge is kept with
// probability edge_keep_prob. Resampled until odd_girth >= min_odd_girth;
// throws BudgetExhausted after max_attempts. Deterministic in seed.
RootedPartialKTree random_partial_k_tree(int k, int n, double edge_keep_prob, Length min_odd_girth,
                                         std::uint64_t seed, int max_attempts = 10000);

struct BipartiteSampleOptions {
  int k = 1;
  int n = 10;
  double edge_keep_prob = 0.8;
  // 0: attach to any earlier clique; w > 0: only to the cliques of the last w
  // added vertices, which stretches distances.
  int window = 0;
  // Re-root at a uniformly chosen clique of the decomposition.
  bool random_root_bag = false;
};

// Certified bipartite rooted partial k-tree: a random k-tree whose edges are
// kept only across a random red/blue split (and with probability
// edge_keep_prob). No rejection needed.
RootedPartialKTree random_bipartite_partial_k_tree(const BipartiteSampleOptions& options, std::uint64_t seed);

// Two bipartite operands for a glue test plus a bipartite type below both:
// m0 is the type of a random bipartite graph and the operands are copies of
// it with edges deleted independently (deleting edges never shortens a root
// distance nor changes its parity).
struct GlueInstance {
  RootedPartialKTree first;
  RootedPartialKTree second;
  TypeMatrix m0;
};
GlueInstance random_glue_instance(const BipartiteSampleOptions& options, double delete_prob, std::uint64_t seed);

// Stateless 64-bit mixer used to derive per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace circk
