#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "circk/generate.hpp"

namespace oracle {

int odd_girth_by_cycles(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<char> on_path(n, 0);
  // Cycles through `start` using only vertices above it.
  std::function<void(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex v, int len) {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 3 && len % 2 == 1 && (best < 0 || len < best)) best = len;
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      walk(start, w, len + 1);
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    walk(s, s, 1);
    on_path[s] = 0;
  }
  return best;
}

namespace {

bool compatible(int p, int q, int a, int b) {
  const int diff = std::abs(a - b);
  return q <= diff && diff <= p - q;
}

// Calls visit(colors) for every valid coloring until it returns false.
void each_coloring(const Graph& g, int p, int q, const std::vector<int>& preset,
                   const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  bool stop = false;
  std::function<void(Vertex)> go = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      if (!visit(color)) stop = true;
      return;
    }
    for (int c = 0; c < p && !stop; ++c) {
      if (preset[v] >= 0 && preset[v] != c) continue;
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (w < v && !compatible(p, q, c, color[w])) ok = false;
      if (!ok) continue;
      color[v] = c;
      go(v + 1);
      color[v] = -1;
    }
  };
  go(0);
}

}  // namespace

bool pq_colorable(const Graph& g, int p, int q, const std::vector<std::pair<Vertex, int>>& fixed) {
  std::vector<int> preset(g.vertex_count(), -1);
  for (auto [v, c] : fixed) {
    if (preset[v] >= 0 && preset[v] != c) return false;
    preset[v] = c;
  }
  bool found = false;
  each_coloring(g, p, q, preset, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<bool> extendable_root_tuples(const Graph& g, const std::vector<Vertex>& roots, int p, int q) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) size *= p;
  std::vector<bool> out(size, false);
  each_coloring(g, p, q, std::vector<int>(g.vertex_count(), -1), [&](const std::vector<int>& c) {
    std::size_t index = 0, weight = 1;
    for (Vertex r : roots) {
      index += c[r] * weight;
      weight *= p;
    }
    out[index] = true;
    return true;
  });
  return out;
}

std::vector<int> path_spread(int p, int q, int start, int length) {
  std::vector<char> seen(p, 0);
  std::function<void(int, int)> go = [&](int color, int left) {
    if (left == 0) {
      seen[color] = 1;
      return;
    }
    for (int c = 0; c < p; ++c)
      if (compatible(p, q, color, c)) go(c, left - 1);
  };
  go(start, length);
  std::vector<int> out;
  for (int c = 0; c < p; ++c)
    if (seen[c]) out.push_back(c);
  return out;
}

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  for (int k = 1; k <= std::max(n, 1); ++k) {
    std::vector<int> color(n, 0);
    // Odometer over k^n assignments.
    while (true) {
      bool ok = true;
      for (const auto& e : g.edges())
        if (color[e.u] == color[e.v]) ok = false;
      if (ok) return n == 0 ? 0 : k;
      int i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

std::pair<int, int> circular_chromatic(const Graph& g) {
  const int n = g.vertex_count();
  std::pair<int, int> best{0, 0};
  for (int p = 1; p <= std::max(n, 1); ++p)
    for (int q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (best.first && static_cast<long>(p) * best.second >= static_cast<long>(best.first) * q) continue;
      if (pq_colorable(g, p, q)) best = {p, q};
    }
  return best;
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 29;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

bool treewidth_at_most(const Graph& g, const std::vector<Vertex>& roots, int k) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (Vertex a : roots)
    for (Vertex b : roots)
      if (a != b) adj[a][b] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(roots.begin(), roots.end(), v) == roots.end()) rest.push_back(v);
  if (rest.size() > 8) throw std::invalid_argument("oracle treewidth: too many vertices");
  std::sort(rest.begin(), rest.end());
  do {
    auto a = adj;
    std::vector<char> gone(n, 0);
    bool ok = true;
    for (Vertex v : rest) {
      std::vector<Vertex> nb;
      for (Vertex w = 0; w < n; ++w)
        if (!gone[w] && w != v && a[v][w]) nb.push_back(w);
      if (static_cast<int>(nb.size()) > k) {
        ok = false;
        break;
      }
      for (Vertex x : nb)
        for (Vertex y : nb)
          if (x != y) a[x][y] = 1;
      gone[v] = 1;
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool isomorphic(const Graph& a, const std::vector<Vertex>& roots_a, const Graph& b,
                const std::vector<Vertex>& roots_b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count() || roots_a.size() != roots_b.size()) return false;
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < roots_a.size(); ++i) {
    if (map[roots_a[i]] >= 0 || used[roots_b[i]]) return false;
    map[roots_a[i]] = roots_b[i];
    used[roots_b[i]] = 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : a.neighbors(u))
      if (map[u] >= 0 && map[v] >= 0 && !b.has_edge(map[u], map[v])) return false;
  std::function<bool(Vertex)> go = [&](Vertex u) {
    if (u == n) return true;
    if (map[u] >= 0) return go(u + 1);
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || a.degree(u) != b.degree(x)) continue;
      bool ok = true;
      for (Vertex w = 0; w < n && ok; ++w)
        if (map[w] >= 0 && a.has_edge(u, w) != b.has_edge(x, map[w])) ok = false;
      if (!ok) continue;
      map[u] = x;
      used[x] = 1;
      if (go(u + 1)) return true;
      map[u] = -1;
      used[x] = 0;
    }
    return false;
  };
  return go(0);
}

std::size_t count_bipartite_types(int k, int bound) {
  const int order = k + 1;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) cells.emplace_back(i, j);
  const int inf = 1 << 20;
  std::vector<int> values;
  for (int v = 1; v <= bound; ++v) values.push_back(v);
  values.push_back(inf);
  std::size_t count = 0;
  std::vector<std::vector<int>> m(order, std::vector<int>(order, 0));
  std::function<void(std::size_t)> go = [&](std::size_t c) {
    if (c == cells.size()) {
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
          for (int l = 0; l < order; ++l) {
            const long via = (m[i][l] >= inf || m[l][j] >= inf) ? inf : m[i][l] + m[l][j];
            if (m[i][j] > via) return;
          }
      for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
          for (int l = j + 1; l < order; ++l)
            if (m[i][j] < inf && m[j][l] < inf && m[i][l] < inf && (m[i][j] + m[j][l] + m[i][l]) % 2) return;
      ++count;
      return;
    }
    for (int v : values) {
      m[cells[c].first][cells[c].second] = m[cells[c].second][cells[c].first] = v;
      go(c + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace oracle

namespace corpus {

std::vector<circk::Graph> mixed(int count, std::uint64_t seed, int max_vertices) {
  using namespace circk;
  std::vector<Graph> out;
  for (int n = 3; n <= std::min(11, max_vertices) && static_cast<int>(out.size()) < count; ++n)
    out.push_back(cycle_graph(n));
  for (int n = 2; n <= std::min(6, max_vertices) && static_cast<int>(out.size()) < count; ++n)
    out.push_back(complete_graph(n));
  if (max_vertices >= 10 && static_cast<int>(out.size()) < count) out.push_back(petersen_graph());
  std::mt19937_64 rng(seed);
  std::uint64_t i = 0;
  while (static_cast<int>(out.size()) < count) {
    const std::uint64_t s = mix_seed(seed, i++);
    const int kind = static_cast<int>(i % 3);
    const int n = std::uniform_int_distribution<int>(4, max_vertices)(rng);
    if (kind < 2) {
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      const double keep = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
      out.push_back(random_partial_k_tree(k, std::max(n, k + 1), keep, Length(3), s).graph);
    } else {
      Graph g(n);
      std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.15, 0.5)(rng));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (edge(rng)) g.add_edge(u, v);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<circk::RootedPartialKTree> rooted(int count, int k, std::uint64_t seed, int max_vertices) {
  using namespace circk;
  std::vector<RootedPartialKTree> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(k + 1, max_vertices)(rng);
    const double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    RootedPartialKTree t = random_partial_k_tree(k, n, keep, Length(3), mix_seed(seed, i));
    const int bags = static_cast<int>(t.certificate.size()) + 1;
    out.push_back(reroot(t, std::uniform_int_distribution<int>(0, bags - 1)(rng)));
  }
  return out;
}

std::vector<circk::RootedPartialKTree> structured(std::uint64_t seed) {
  using namespace circk;
  std::vector<RootedPartialKTree> out;
  for (int len = 1; len <= 17; ++len) out.push_back({path_graph(len + 1), 1, {0, len}, {}});
  for (int n = 4; n <= 18; n += 2)
    for (int gap = 1; gap <= n / 2; ++gap) out.push_back({cycle_graph(n), 1, {0, gap}, {}});
  for (int gap = 1; gap <= 3; ++gap)
    for (int tail = 4; gap + tail + 1 <= 18; tail += 3) {
      RootedPartialKTree t{path_graph(gap + 1), 1, {0, gap}, {}};
      Vertex prev = 0;
      for (int i = 0; i < tail; ++i) {
        const Vertex v = t.graph.add_vertex();
        t.graph.add_edge(prev, v);
        prev = v;
      }
      out.push_back(std::move(t));
    }
  out.push_back(isolated_roots(1));
  out.push_back(isolated_roots(2));
  std::uint64_t i = 0;
  for (int k = 1; k <= 2; ++k)
    for (int n = k + 1; n <= 18; ++n)
      for (int window = 0; window <= 3; ++window) {
        BipartiteSampleOptions o;
        o.k = k;
        o.n = n;
        o.edge_keep_prob = 0.75;
        o.window = window;
        o.random_root_bag = true;
        out.push_back(random_bipartite_partial_k_tree(o, mix_seed(seed, i++)));
      }
  return out;
}

}  // namespace corpus
