#include "circk/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "circk/canonical.hpp"
#include "circk/errors.hpp"

namespace circk {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_with_root_clique(const Graph& g, std::span<const Vertex> roots) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  for (Vertex a : roots)
    for (Vertex b : roots)
      if (a != b) adj[a] |= Mask{1} << b;
  return adj;
}

std::optional<std::vector<Vertex>> greedy_order(std::vector<Mask> adj, Mask pending, int k) {
  std::vector<Vertex> order;
  while (pending) {
    Vertex pick = -1;
    for (Mask rest = pending; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      if (std::popcount(adj[v]) <= k) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    const Mask nb = adj[pick];
    for (Mask rest = nb; rest; rest &= rest - 1) {
      const Vertex w = std::countr_zero(rest);
      adj[w] = (adj[w] | nb) & ~(Mask{1} << w) & ~(Mask{1} << pick);
    }
    adj[pick] = 0;
    pending &= ~(Mask{1} << pick);
    order.push_back(pick);
  }
  return order;
}

// Later neighbors of v once the set `gone` has been eliminated: vertices
// outside gone reachable from v through gone.
int later_degree(const std::vector<Mask>& adj, Mask gone, Vertex v) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  Mask reached = 0;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj[std::countr_zero(rest)];
    next &= ~seen;
    seen |= next;
    reached |= next & ~gone;
    frontier = next & gone;
  }
  return std::popcount(reached);
}

std::optional<std::vector<Vertex>> subset_order(const std::vector<Mask>& adj, const std::vector<Vertex>& free, int k) {
  const int m = static_cast<int>(free.size());
  if (m > 20) throw TooLarge("small_elimination_order: more than 20 non-root vertices");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<int> from(std::size_t{1} << m, -2);  // -2 unreachable, -1 start
  from[0] = -1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (from[s] == -2) continue;
    Mask gone = 0;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) gone |= Mask{1} << free[i];
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1) continue;
      const std::uint32_t t = s | (std::uint32_t{1} << i);
      if (from[t] != -2) continue;
      if (later_degree(adj, gone, free[i]) <= k) from[t] = i;
    }
  }
  if (from[full] == -2) return std::nullopt;
  std::vector<Vertex> order;
  for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << from[s])) order.push_back(free[from[s]]);
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> small_elimination_order(const Graph& g, std::span<const Vertex> roots, int k) {
  const int n = g.vertex_count();
  if (n > 64) throw TooLarge("small_elimination_order: more than 64 vertices");
  const std::vector<Mask> adj = adjacency_with_root_clique(g, roots);
  Mask pending = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Vertex r : roots) pending &= ~(Mask{1} << r);
  if (k <= 2) return greedy_order(adj, pending, k);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (pending >> v & 1) free.push_back(v);
  return subset_order(adj, free, k);
}

std::optional<RootedPartialKTree> certify(const Graph& g, std::span<const Vertex> roots, int k) {
  if (static_cast<int>(roots.size()) != k + 1) throw std::invalid_argument("certify needs k+1 roots");
  auto order = small_elimination_order(g, roots, k);
  if (!order) return std::nullopt;
  auto cert = certificate_from_elimination(g, roots, *order, k);
  if (!cert) return std::nullopt;
  return RootedPartialKTree{g, k, std::vector<Vertex>(roots.begin(), roots.end()), std::move(*cert)};
}

std::optional<RootedPartialKTree> certify(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n < k + 1) throw std::invalid_argument("certify needs at least k+1 vertices");
  auto order = small_elimination_order(g, {}, k);
  if (!order) return std::nullopt;
  std::vector<Vertex> roots(order->end() - (k + 1), order->end());
  std::sort(roots.begin(), roots.end());
  order->resize(n - (k + 1));
  auto cert = certificate_from_elimination(g, roots, *order, k);
  if (!cert) return std::nullopt;
  return RootedPartialKTree{g, k, std::move(roots), std::move(*cert)};
}

EnumerationStatus enumerate_partial_k_trees(
    const EnumerationOptions& options,
    const std::function<bool(int vertices, const std::vector<EnumeratedGraph>& level)>& on_level) {
  const int k = options.k;
  if (k < 0) throw std::invalid_argument("enumerate_partial_k_trees needs k >= 0");
  if (options.max_vertices > kCanonicalFormCap) throw TooLarge("enumeration vertex cap above the canonical form cap");
  std::vector<Vertex> roots;
  if (options.rooted) {
    roots.resize(k + 1);
    std::iota(roots.begin(), roots.end(), 0);
  }
  auto out_of_time = [&] { return options.deadline && std::chrono::steady_clock::now() > *options.deadline; };

  auto finish = [&](std::vector<std::pair<std::string, Graph>>& raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<EnumeratedGraph> level;
    level.reserve(raw.size());
    for (auto& [canon, g] : raw) {
      std::optional<RootedPartialKTree> t;
      if (options.rooted) t = certify(g, roots, k);
      else if (g.vertex_count() >= k + 1) t = certify(g, k);
      else t = RootedPartialKTree{g, k, {}, {}};
      if (!t) throw LemmaViolation("enumeration produced a graph of treewidth above k");
      level.push_back({std::move(*t), std::move(canon)});
    }
    return level;
  };

  // First level.
  std::vector<std::pair<std::string, Graph>> raw;
  int start = options.rooted ? k + 1 : 1;
  if (start > options.max_vertices) return EnumerationStatus::complete;
  {
    std::unordered_set<std::string> seen;
    const int pairs = start * (start - 1) / 2;
    if (pairs > 20) throw TooLarge("too many root pairs to enumerate");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      Graph g(start);
      int bit = 0;
      for (int a = 0; a < start; ++a)
        for (int b = a + 1; b < start; ++b, ++bit)
          if (mask >> bit & 1) g.add_edge(a, b);
      if (options.bipartite_only && !is_bipartite(g)) continue;
      std::string canon = canonical_form(g, roots);
      if (seen.insert(canon).second) raw.emplace_back(std::move(canon), std::move(g));
    }
  }
  std::vector<EnumeratedGraph> level = finish(raw);
  if (!on_level(start, level)) return EnumerationStatus::complete;

  for (int n = start + 1; n <= options.max_vertices; ++n) {
    std::unordered_set<std::string> seen;
    raw.clear();
    const int old = n - 1;
    for (const EnumeratedGraph& item : level) {
      if (out_of_time()) return EnumerationStatus::budget_limited;
      const Graph& base = item.tree.graph;
      // Neighbor sets of size <= k, as bitmasks over old vertices.
      std::vector<int> pick;
      std::function<void(int)> choose = [&](int from) {
        Graph g = base;
        const Vertex v = g.add_vertex();
        for (int w : pick) g.add_edge(v, w);
        bool keep = !options.bipartite_only || is_bipartite(g);
        if (keep && static_cast<int>(pick.size()) >= 2 && k >= 2)
          keep = small_elimination_order(g, roots, k).has_value();
        if (keep && k < 2 && static_cast<int>(pick.size()) > k) keep = false;
        if (keep) {
          std::string canon = canonical_form(g, roots);
          if (seen.insert(canon).second) raw.emplace_back(std::move(canon), std::move(g));
        }
        if (static_cast<int>(pick.size()) == k) return;
        for (int w = from; w < old; ++w) {
          pick.push_back(w);
          choose(w + 1);
          pick.pop_back();
        }
      };
      choose(0);
    }
    level = finish(raw);
    if (!on_level(n, level)) return EnumerationStatus::complete;
  }
  return EnumerationStatus::complete;
}

}  // namespace circk
