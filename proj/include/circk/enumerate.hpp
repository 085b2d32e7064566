#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circk/graph.hpp"
#include "circk/ktree.hpp"

namespace circk {

// Order in which the non-root vertices of g can be eliminated, each having at
// most k later neighbors in the filled graph of g plus a clique on `roots`.
// Exact: greedy low-degree elimination for k <= 2, subset dynamic programming
// above (at most 20 non-root vertices). nullopt when no such order exists.
std::optional<std::vector<Vertex>> small_elimination_order(const Graph& g, std::span<const Vertex> roots, int k);

// Certificate for g rooted at `roots` when g plus a clique on the roots has
// treewidth at most k; nullopt otherwise.
std::optional<RootedPartialKTree> certify(const Graph& g, std::span<const Vertex> roots, int k);

// Unrooted: roots are the last k+1 vertices left by the elimination order.
// Needs at least k+1 vertices.
std::optional<RootedPartialKTree> certify(const Graph& g, int k);

struct EnumerationOptions {
  int k = 1;
  int max_vertices = 8;
  // Rooted: vertices 0..k are distinguished roots present from the start and
  // isomorphisms must fix them. Unrooted: plain graphs of treewidth <= k.
  bool rooted = true;
  bool bipartite_only = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumeratedGraph {
  RootedPartialKTree tree;
  std::string canonical;
};

enum class EnumerationStatus { complete, budget_limited };

// Every isomorphism class, one level per vertex count (k+1 or 1 up to
// max_vertices), each level sorted by canonical string. Levels grow by adding
// a vertex adjacent to at most k existing vertices, which reaches every
// partial k-tree. on_level returns false to stop early (reported as
// complete). Needs max_vertices <= kCanonicalFormCap.
EnumerationStatus enumerate_partial_k_trees(
    const EnumerationOptions& options,
    const std::function<bool(int vertices, const std::vector<EnumeratedGraph>& level)>& on_level);

}  // namespace circk
