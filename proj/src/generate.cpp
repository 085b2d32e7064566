#include "circk/generate.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "circk/errors.hpp"
#include "circk/graph.hpp"

namespace circk {
namespace {

struct KTreeSkeleton {
  std::vector<std::vector<Vertex>> bags;
  std::vector<BuildStep> steps;
  std::vector<Edge> edges;
};

KTreeSkeleton random_k_tree(int k, int n, int window, std::mt19937_64& rng) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (n < k + 1) throw std::invalid_argument("n must be at least k+1");
  KTreeSkeleton sk;
  std::vector<Vertex> first(k + 1);
  std::iota(first.begin(), first.end(), 0);
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) sk.edges.push_back({i, j});
  sk.bags.push_back(first);
  for (Vertex v = k + 1; v < n; ++v) {
    const int count = static_cast<int>(sk.bags.size());
    const int lo = window > 0 ? std::max(0, count - window) : 0;
    std::uniform_int_distribution<int> pick_bag(lo, count - 1);
    const std::vector<Vertex>& bag = sk.bags[pick_bag(rng)];
    std::uniform_int_distribution<int> pick_drop(0, k);
    const int drop = pick_drop(rng);
    std::vector<Vertex> attachment;
    for (int i = 0; i <= k; ++i)
      if (i != drop) attachment.push_back(bag[i]);
    for (Vertex a : attachment) sk.edges.push_back({a, v});
    std::vector<Vertex> next = attachment;
    next.push_back(v);
    sk.steps.push_back({v, std::move(attachment)});
    sk.bags.push_back(std::move(next));
  }
  return sk;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RootedPartialKTree random_partial_k_tree(int k, int n, double edge_keep_prob, Length min_odd_girth,
                                         std::uint64_t seed, int max_attempts) {
  if (edge_keep_prob < 0.0 || edge_keep_prob > 1.0) throw std::invalid_argument("edge_keep_prob outside [0,1]");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    KTreeSkeleton sk = random_k_tree(k, n, 0, rng);
    std::bernoulli_distribution keep(edge_keep_prob);
    RootedPartialKTree t;
    t.graph = Graph(n);
    for (const Edge& e : sk.edges)
      if (keep(rng)) t.graph.add_edge(e.u, e.v);
    t.k = k;
    t.roots = sk.bags.front();
    t.certificate = std::move(sk.steps);
    if (odd_girth(t.graph) >= min_odd_girth) return t;
  }
  throw BudgetExhausted("random_partial_k_tree: no sample with odd girth >= " + min_odd_girth.to_string() +
                        " after " + std::to_string(max_attempts) + " attempts");
}

RootedPartialKTree random_bipartite_partial_k_tree(const BipartiteSampleOptions& options, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  KTreeSkeleton sk = random_k_tree(options.k, options.n, options.window, rng);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution keep(options.edge_keep_prob);
  std::vector<char> red(options.n);
  for (auto& r : red) r = coin(rng);
  RootedPartialKTree t;
  t.graph = Graph(options.n);
  for (const Edge& e : sk.edges) {
    const bool kept = keep(rng);
    if (kept && red[e.u] != red[e.v]) t.graph.add_edge(e.u, e.v);
  }
  t.k = options.k;
  t.roots = sk.bags.front();
  t.certificate = std::move(sk.steps);
  if (options.random_root_bag) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sk.bags.size()) - 1);
    t = reroot(t, pick(rng));
  }
  return t;
}

GlueInstance random_glue_instance(const BipartiteSampleOptions& options, double delete_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RootedPartialKTree base = random_bipartite_partial_k_tree(options, rng());
  std::bernoulli_distribution drop(delete_prob);
  auto thin = [&] {
    RootedPartialKTree t = base;
    t.graph = Graph(base.vertex_count());
    for (const Edge& e : base.graph.edges())
      if (!drop(rng)) t.graph.add_edge(e.u, e.v);
    return t;
  };
  GlueInstance out{thin(), thin(), type_of(base)};
  return out;
}

}  // namespace circk
