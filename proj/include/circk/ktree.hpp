#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circk/graph.hpp"

namespace circk {

// One k-tree construction step: `vertex` joins, adjacent to the k-clique
// `attachment`.
struct BuildStep {
  Vertex vertex;
  std::vector<Vertex> attachment;
  friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

// A graph with k+1 ordered roots and a build sequence for a supergraph k-tree
// on the same vertex set whose initial (k+1)-clique is the root tuple.
struct RootedPartialKTree {
  Graph graph;
  int k = 0;
  std::vector<Vertex> roots;
  std::vector<BuildStep> certificate;

  int vertex_count() const { return graph.vertex_count(); }
};

struct Validation {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

// Replays the certificate and reports the first violated invariant.
Validation validate(const RootedPartialKTree& t);

// k+1 isolated roots 0..k with the trivial certificate.
RootedPartialKTree isolated_roots(int k);

struct GlueResult {
  RootedPartialKTree tree;
  // second_map[v] = vertex of `tree` that vertex v of the second operand became.
  std::vector<Vertex> second_map;
};

// Disjoint union with a.roots[i] identified with b.roots[i]. The first
// operand keeps its vertex numbers; the second's non-roots are appended.
// Throws KMismatch.
GlueResult glue_with_map(const RootedPartialKTree& a, const RootedPartialKTree& b);
RootedPartialKTree glue(const RootedPartialKTree& a, const RootedPartialKTree& b);

struct SplitResult {
  RootedPartialKTree first;
  RootedPartialKTree second;
  std::vector<Vertex> first_to_original;
  std::vector<Vertex> second_to_original;
};

// Separator split: glue(first, second) reproduces t, and first has between
// n+1 and 2n vertices. Requires a valid certificate and n >= k+1; throws
// TooSmall when t has fewer than 3n vertices.
SplitResult split(const RootedPartialKTree& t, int n);

// Tree decomposition read off a certificate: bag 0 is the root clique, bag
// s+1 is step s's attachment plus its vertex. Every bag has k+1 vertices.
struct Decomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;  // parent[0] = -1
  std::vector<int> introduced_in;  // per vertex, the bag that introduces it
};

Decomposition decomposition_of(const RootedPartialKTree& t);

// Builds a k-tree certificate for `g` rooted at `roots` from a tree
// decomposition (bags, undirected tree edges) whose bag `root_bag` contains
// every root. Vertices missing from all bags attach anywhere. Returns nullopt
// if some bag exceeds k+1 vertices.
std::optional<std::vector<BuildStep>> certificate_from_decomposition(
    const Graph& g, std::span<const Vertex> roots, const std::vector<std::vector<Vertex>>& bags,
    const std::vector<std::pair<int, int>>& tree_edges, int root_bag, int k);

// Builds a k-tree certificate from an elimination order of the non-root
// vertices (first entry eliminated first); the roots are treated as a clique
// eliminated last. Returns nullopt when some vertex has more than k
// not-yet-eliminated neighbors in the filled graph.
std::optional<std::vector<BuildStep>> certificate_from_elimination(
    const Graph& g, std::span<const Vertex> roots, std::span<const Vertex> order, int k);

// Same graph, re-rooted at the vertices of decomposition bag `bag` (sorted).
RootedPartialKTree reroot(const RootedPartialKTree& t, int bag);

}  // namespace circk
