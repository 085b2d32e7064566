#pragma once

// Independent brute-force oracles and shared corpora for the test suites.
// Nothing here calls the library routine it is used to check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circk/circular.hpp"
#include "circk/graph.hpp"
#include "circk/ktree.hpp"
#include "circk/length.hpp"
#include "circk/type_matrix.hpp"

namespace oracle {

using circk::Graph;
using circk::Vertex;

// Shortest odd cycle by enumerating simple cycles; -1 when none.
int odd_girth_by_cycles(const Graph& g);

// Depth-first enumeration of all colorings with colors 0..p-1.
bool pq_colorable(const Graph& g, int p, int q, const std::vector<std::pair<Vertex, int>>& fixed = {});

// Root tuples (root 0 least significant) that extend, by enumerating whole
// colorings.
std::vector<bool> extendable_root_tuples(const Graph& g, const std::vector<Vertex>& roots, int p, int q);

// Far-end colors over every coloring of a path with `length` edges.
std::vector<int> path_spread(int p, int q, int start, int length);

int chromatic_number(const Graph& g);

// Smallest p/q over all p <= n, q < p with a coloring, as (p, q) reduced.
std::pair<int, int> circular_chromatic(const Graph& g);

// Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> all_distances(const Graph& g);

// Exact treewidth <= k of g plus a clique on `roots` by trying every
// elimination order of the non-roots (at most 8 of them).
bool treewidth_at_most(const Graph& g, const std::vector<Vertex>& roots, int k);

// Isomorphism fixing roots[i] -> roots2[i], by trying permutations (n <= 9)
// or, above that, backtracking with degree pruning.
bool isomorphic(const Graph& a, const std::vector<Vertex>& roots_a, const Graph& b,
                const std::vector<Vertex>& roots_b);

// Bipartite types by plain nested loops over entries.
std::size_t count_bipartite_types(int k, int bound);

}  // namespace oracle

namespace corpus {

// Mixed deterministic corpus: named graphs, random partial k-trees (k 1..3)
// and sparse random graphs, all with at most max_vertices vertices.
std::vector<circk::Graph> mixed(int count, std::uint64_t seed, int max_vertices = 12);

// Random certified rooted partial k-trees (any parity).
std::vector<circk::RootedPartialKTree> rooted(int count, int k, std::uint64_t seed, int max_vertices = 10);

// Bipartite rooted graphs with at most 18 vertices: root paths, even cycles,
// root pairs with long tails, isolated roots, and certified random samples
// for k = 1, 2. Root paths and cycles carry no certificate.
std::vector<circk::RootedPartialKTree> structured(std::uint64_t seed);

}  // namespace corpus
