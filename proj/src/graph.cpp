#include "circk/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace circk {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(vertex_count);
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  if (!labels_.empty()) labels_.emplace_back();
  return vertex_count() - 1;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  edges_.push_back({u, v});
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> position(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<Vertex>(i);
  Graph result(static_cast<int>(keep.size()));
  for (const Edge& e : edges_) {
    if (position[e.u] >= 0 && position[e.v] >= 0) result.add_edge(position[e.u], position[e.v]);
  }
  return result;
}

bool Graph::same_edges(const Graph& other) const {
  if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
  return adjacency_ == other.adjacency_;
}

Graph path_graph(int vertices) {
  Graph g(vertices);
  for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int length) {
  if (length < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(length);
  for (int i = 0; i < length; ++i) g.add_edge(i, (i + 1) % length);
  return g;
}

Graph complete_graph(int vertices) {
  Graph g(vertices);
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::vector<Vertex> Bipartition::red() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(sides_.size()); ++v)
    if (sides_[v] == Side::red) out.push_back(v);
  return out;
}

std::vector<Vertex> Bipartition::blue() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(sides_.size()); ++v)
    if (sides_[v] == Side::blue) out.push_back(v);
  return out;
}

Length odd_girth(const Graph& g) {
  const int n = g.vertex_count();
  std::int64_t best = -1;
  std::vector<int> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Nothing at this depth or deeper can improve the current best.
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          std::int64_t len = 2 * static_cast<std::int64_t>(dist[u]) + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) break;
  }
  return best < 0 ? Length::infinity() : Length(best);
}

std::variant<Bipartition, OddCycleWitness> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Side> sides(n, Side::red);
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          sides[w] = sides[u] == Side::red ? Side::blue : Side::red;
          queue.push(w);
        } else if (sides[w] == sides[u]) {
          // Walk both tree paths up to their lowest common ancestor.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // the common ancestor is already in `left`
          OddCycleWitness witness;
          witness.cycle.assign(left.begin(), left.end());
          witness.cycle.insert(witness.cycle.begin(), right.rbegin(), right.rend());
          return witness;
        }
      }
    }
  }
  return Bipartition(std::move(sides));
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<Bipartition>(bipartition(g)); }

std::vector<Length> distances(const Graph& g, std::span<const Vertex> sources) {
  const int n = g.vertex_count();
  std::vector<Length> dist(n, Length::infinity());
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s : sources) {
    if (s < 0 || s >= n) throw std::invalid_argument("source out of range");
    if (dist[s].finite()) continue;
    dist[s] = Length(0);
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_infinite()) {
        dist[w] = dist[u] + Length(1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Length> distances(const Graph& g, Vertex source) {
  return distances(g, std::span<const Vertex>(&source, 1));
}

std::vector<int> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

Contraction contract_closed_neighborhood(const Graph& g, Vertex v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("contraction vertex out of range");
  std::vector<bool> in_ball(n, false);
  in_ball[v] = true;
  for (Vertex w : g.neighbors(v)) in_ball[w] = true;

  std::vector<Vertex> mapping(n);
  Vertex next = 0;
  for (Vertex u = 0; u < n; ++u)
    if (!in_ball[u]) mapping[u] = next++;
  const Vertex merged = next;
  for (Vertex u = 0; u < n; ++u)
    if (in_ball[u]) mapping[u] = merged;

  Graph result(merged + 1);
  for (const Edge& e : g.edges()) {
    Vertex a = mapping[e.u];
    Vertex b = mapping[e.v];
    if (a != b) result.add_edge(a, b);
  }
  return {std::move(result), std::move(mapping), merged};
}

}  // namespace circk
