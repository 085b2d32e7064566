#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "circk/length.hpp"

namespace circk {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges keep their insertion order
// (the text format round-trips through it); adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Vertex add_vertex();
  // Returns false when the edge is already present. Self-loops and
  // out-of-range endpoints throw std::invalid_argument.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Subgraph induced by `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  // Same vertex set and edge set, ignoring edge order and orientation.
  bool same_edges(const Graph& other) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

Graph path_graph(int vertices);
Graph cycle_graph(int length);
Graph complete_graph(int vertices);
Graph petersen_graph();

enum class Side : unsigned char { red, blue };

// Two-coloring of every vertex. In each connected component the smallest
// vertex is red; isolated vertices are red.
class Bipartition {
 public:
  explicit Bipartition(std::vector<Side> sides) : sides_(std::move(sides)) {}
  Side side(Vertex v) const { return sides_[v]; }
  bool is_red(Vertex v) const { return sides_[v] == Side::red; }
  bool is_blue(Vertex v) const { return sides_[v] == Side::blue; }
  std::vector<Vertex> red() const;
  std::vector<Vertex> blue() const;
  const std::vector<Side>& sides() const { return sides_; }

 private:
  std::vector<Side> sides_;
};

// An odd cycle v0 v1 ... v_{l-1} (closing edge v_{l-1} v0).
struct OddCycleWitness {
  std::vector<Vertex> cycle;
  int length() const { return static_cast<int>(cycle.size()); }
};

Length odd_girth(const Graph& g);
std::variant<Bipartition, OddCycleWitness> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Multi-source BFS: distance to the nearest source, infinity if unreachable.
std::vector<Length> distances(const Graph& g, std::span<const Vertex> sources);
std::vector<Length> distances(const Graph& g, Vertex source);

// Component id per vertex; ids numbered in order of smallest member.
std::vector<int> components(const Graph& g);

struct Contraction {
  Graph graph;
  // mapping[old] = new vertex; surjective onto 0..graph.vertex_count()-1.
  std::vector<Vertex> mapping;
  Vertex merged;
};

// Replaces N[v] by one fresh vertex with the highest index; surviving vertices
// keep their relative order. Parallel edges merge and loops are dropped.
Contraction contract_closed_neighborhood(const Graph& g, Vertex v);

}  // namespace circk
