#include "circk/ktree.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "circk/errors.hpp"

namespace circk {
namespace {

class EdgeSet {
 public:
  explicit EdgeSet(int n) : n_(n) {}
  void insert(Vertex a, Vertex b) { set_.insert(key(a, b)); }
  bool contains(Vertex a, Vertex b) const { return set_.count(key(a, b)) > 0; }

 private:
  std::uint64_t key(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(b);
  }
  std::uint64_t n_;
  std::unordered_set<std::uint64_t> set_;
};

std::string vertex_list(std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

}  // namespace

Validation validate(const RootedPartialKTree& t) {
  const int n = t.graph.vertex_count();
  auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
  if (t.k < 0) return fail("negative k");
  if (static_cast<int>(t.roots.size()) != t.k + 1)
    return fail("expected " + std::to_string(t.k + 1) + " roots, got " + std::to_string(t.roots.size()));
  std::vector<bool> present(n, false);
  for (Vertex r : t.roots) {
    if (r < 0 || r >= n) return fail("root " + std::to_string(r) + " out of range");
    if (present[r]) return fail("root " + std::to_string(r) + " repeated");
    present[r] = true;
  }
  if (static_cast<int>(t.certificate.size()) + t.k + 1 != n)
    return fail("certificate covers " + std::to_string(t.certificate.size() + t.k + 1) + " vertices, graph has " +
                std::to_string(n));
  EdgeSet ktree(n);
  for (std::size_t i = 0; i < t.roots.size(); ++i)
    for (std::size_t j = i + 1; j < t.roots.size(); ++j) ktree.insert(t.roots[i], t.roots[j]);
  for (std::size_t s = 0; s < t.certificate.size(); ++s) {
    const BuildStep& step = t.certificate[s];
    const std::string where = "certificate step " + std::to_string(s) + ": ";
    if (step.vertex < 0 || step.vertex >= n) return fail(where + "vertex out of range");
    if (present[step.vertex]) return fail(where + "vertex " + std::to_string(step.vertex) + " already present");
    if (static_cast<int>(step.attachment.size()) != t.k)
      return fail(where + "attachment " + vertex_list(step.attachment) + " is not of size k");
    for (std::size_t i = 0; i < step.attachment.size(); ++i) {
      Vertex a = step.attachment[i];
      if (a < 0 || a >= n || !present[a]) return fail(where + "attachment vertex " + std::to_string(a) + " not present");
      for (std::size_t j = 0; j < i; ++j) {
        if (step.attachment[j] == a) return fail(where + "attachment repeats " + std::to_string(a));
        if (!ktree.contains(step.attachment[j], a))
          return fail(where + "attachment " + vertex_list(step.attachment) + " is not a clique");
      }
    }
    for (Vertex a : step.attachment) ktree.insert(a, step.vertex);
    present[step.vertex] = true;
  }
  for (const Edge& e : t.graph.edges()) {
    if (!ktree.contains(e.u, e.v))
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " absent from the replayed k-tree");
  }
  return {};
}

RootedPartialKTree isolated_roots(int k) {
  RootedPartialKTree t;
  t.graph = Graph(k + 1);
  t.k = k;
  t.roots.resize(k + 1);
  std::iota(t.roots.begin(), t.roots.end(), 0);
  return t;
}

GlueResult glue_with_map(const RootedPartialKTree& a, const RootedPartialKTree& b) {
  if (a.k != b.k) throw KMismatch("glue: k=" + std::to_string(a.k) + " vs k=" + std::to_string(b.k));
  if (a.roots.size() != b.roots.size()) throw KMismatch("glue: root tuples differ in length");
  GlueResult out;
  RootedPartialKTree& t = out.tree;
  t.graph = a.graph;
  t.graph.set_labels({});
  t.k = a.k;
  t.roots = a.roots;
  t.certificate = a.certificate;

  const int nb = b.graph.vertex_count();
  out.second_map.assign(nb, -1);
  for (std::size_t i = 0; i < b.roots.size(); ++i) out.second_map[b.roots[i]] = a.roots[i];
  for (Vertex v = 0; v < nb; ++v)
    if (out.second_map[v] < 0) out.second_map[v] = t.graph.add_vertex();
  for (const Edge& e : b.graph.edges()) t.graph.add_edge(out.second_map[e.u], out.second_map[e.v]);
  for (const BuildStep& step : b.certificate) {
    BuildStep mapped{out.second_map[step.vertex], {}};
    for (Vertex x : step.attachment) mapped.attachment.push_back(out.second_map[x]);
    t.certificate.push_back(std::move(mapped));
  }
  return out;
}

RootedPartialKTree glue(const RootedPartialKTree& a, const RootedPartialKTree& b) {
  return glue_with_map(a, b).tree;
}

Decomposition decomposition_of(const RootedPartialKTree& t) {
  const int n = t.graph.vertex_count();
  Decomposition d;
  d.introduced_in.assign(n, -1);
  d.bags.push_back(t.roots);
  d.parent.push_back(-1);
  for (Vertex r : t.roots) d.introduced_in[r] = 0;
  std::vector<int> built_at(n, 0);
  for (std::size_t s = 0; s < t.certificate.size(); ++s) {
    const BuildStep& step = t.certificate[s];
    const int bag = static_cast<int>(s) + 1;
    // The latest-built attachment vertex's bag contains the whole attachment.
    int parent = 0;
    int latest = 0;
    for (Vertex a : step.attachment) {
      if (built_at[a] > latest) {
        latest = built_at[a];
        parent = d.introduced_in[a];
      }
    }
    std::vector<Vertex> members = step.attachment;
    members.push_back(step.vertex);
    d.bags.push_back(std::move(members));
    d.parent.push_back(parent);
    d.introduced_in[step.vertex] = bag;
    built_at[step.vertex] = bag;
  }
  return d;
}

std::optional<std::vector<BuildStep>> certificate_from_elimination(const Graph& g, std::span<const Vertex> roots,
                                                                   std::span<const Vertex> order, int k) {
  const int n = g.vertex_count();
  if (static_cast<int>(roots.size()) != k + 1) throw std::invalid_argument("need k+1 roots");
  std::vector<char> is_root(n, 0);
  for (Vertex r : roots) is_root[r] = 1;
  if (order.size() + roots.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("elimination order must cover every non-root vertex");

  std::vector<std::vector<Vertex>> filled(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    filled[v].assign(nb.begin(), nb.end());
  }
  auto connect = [&](Vertex a, Vertex b) {
    auto& fa = filled[a];
    auto it = std::lower_bound(fa.begin(), fa.end(), b);
    if (it != fa.end() && *it == b) return;
    fa.insert(it, b);
    auto& fb = filled[b];
    fb.insert(std::lower_bound(fb.begin(), fb.end(), a), a);
  };

  std::vector<char> eliminated(n, 0);
  std::vector<std::vector<Vertex>> higher(n);
  for (Vertex v : order) {
    if (is_root[v] || eliminated[v]) throw std::invalid_argument("elimination order repeats or contains a root");
    std::vector<Vertex> rest;
    for (Vertex w : filled[v])
      if (!eliminated[w]) rest.push_back(w);
    if (static_cast<int>(rest.size()) > k) return std::nullopt;
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j) connect(rest[i], rest[j]);
    higher[v] = std::move(rest);
    eliminated[v] = 1;
  }

  std::vector<int> built_at(n, 0);
  std::vector<std::vector<Vertex>> construction_bag(n);
  const std::vector<Vertex> root_bag(roots.begin(), roots.end());
  std::vector<BuildStep> steps;
  steps.reserve(order.size());
  int clock = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const std::vector<Vertex>& need = higher[v];
    const std::vector<Vertex>* base = &root_bag;
    int latest = 0;
    for (Vertex w : need) {
      if (built_at[w] > latest) {
        latest = built_at[w];
        base = &construction_bag[w];
      }
    }
    std::vector<Vertex> attachment = need;
    for (Vertex w : *base) {
      if (static_cast<int>(attachment.size()) == k) break;
      if (std::find(attachment.begin(), attachment.end(), w) == attachment.end()) attachment.push_back(w);
    }
    construction_bag[v] = attachment;
    construction_bag[v].push_back(v);
    built_at[v] = ++clock;
    steps.push_back({v, std::move(attachment)});
  }
  return steps;
}

std::optional<std::vector<BuildStep>> certificate_from_decomposition(
    const Graph& g, std::span<const Vertex> roots, const std::vector<std::vector<Vertex>>& bags,
    const std::vector<std::pair<int, int>>& tree_edges, int root_bag, int k) {
  const int n = g.vertex_count();
  const int bag_count = static_cast<int>(bags.size());
  for (const auto& bag : bags)
    if (static_cast<int>(bag.size()) > k + 1) return std::nullopt;
  for (Vertex r : roots)
    if (std::find(bags[root_bag].begin(), bags[root_bag].end(), r) == bags[root_bag].end())
      throw std::invalid_argument("root bag does not contain every root");

  std::vector<std::vector<int>> tree(bag_count);
  for (auto [a, b] : tree_edges) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  std::vector<int> depth(bag_count, -1);
  std::queue<int> queue;
  depth[root_bag] = 0;
  queue.push(root_bag);
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop();
    for (int c : tree[b]) {
      if (depth[c] < 0) {
        depth[c] = depth[b] + 1;
        queue.push(c);
      }
    }
  }

  constexpr int kNowhere = 1 << 30;
  std::vector<int> top_depth(n, kNowhere);
  std::vector<int> top_bag(n, kNowhere);
  for (int b = 0; b < bag_count; ++b) {
    if (depth[b] < 0) continue;
    for (Vertex v : bags[b]) {
      if (depth[b] < top_depth[v] || (depth[b] == top_depth[v] && b < top_bag[v])) {
        top_depth[v] = depth[b];
        top_bag[v] = b;
      }
    }
  }
  std::vector<char> is_root(n, 0);
  for (Vertex r : roots) is_root[r] = 1;
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v)
    if (!is_root[v]) order.push_back(v);
  // Deepest top bag first keeps every fill edge inside a bag.
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (top_depth[a] != top_depth[b]) return top_depth[a] > top_depth[b];
    if (top_bag[a] != top_bag[b]) return top_bag[a] < top_bag[b];
    return a < b;
  });
  return certificate_from_elimination(g, roots, order, k);
}

SplitResult split(const RootedPartialKTree& t, int n) {
  if (Validation v = validate(t); !v) throw InvalidCertificate("split: " + v.violation);
  const int k = t.k;
  if (n < k + 1) throw PreconditionFailed("split: n must be at least k+1");
  const int total = t.graph.vertex_count();
  if (total < 3 * n)
    throw TooSmall("split: " + std::to_string(total) + " vertices, need at least 3n = " + std::to_string(3 * n));

  const Decomposition dec = decomposition_of(t);
  const int bag_count = static_cast<int>(dec.bags.size());
  std::vector<std::vector<int>> children(bag_count);
  for (int b = 1; b < bag_count; ++b) children[dec.parent[b]].push_back(b);
  // sub[b]: vertices introduced in the subtree below and including bag b.
  std::vector<int> sub(bag_count, 0);
  for (int b = bag_count - 1; b >= 1; --b) {
    sub[b] += 1;
    sub[dec.parent[b]] += sub[b];
  }

  int separator = 0;
  std::vector<int> chosen;
  while (true) {
    const auto& kids = children[separator];
    auto in_range = std::find_if(kids.begin(), kids.end(), [&](int c) {
      return k + 1 + sub[c] >= n + 1 && k + 1 + sub[c] <= 2 * n;
    });
    if (in_range != kids.end()) {
      chosen = {*in_range};
      break;
    }
    auto overshoot = std::find_if(kids.begin(), kids.end(), [&](int c) { return k + 1 + sub[c] > 2 * n; });
    if (overshoot != kids.end()) {
      separator = *overshoot;
      continue;
    }
    int size = k + 1;
    for (int c : kids) {
      chosen.push_back(c);
      size += sub[c];
      if (size >= n + 1) break;
    }
    if (size < n + 1) throw LemmaViolation("split: separator walk failed to reach n+1 vertices");
    break;
  }

  std::vector<char> bag_in_first(bag_count, 0);
  std::vector<int> stack(chosen.begin(), chosen.end());
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    bag_in_first[b] = 1;
    for (int c : children[b]) stack.push_back(c);
  }
  std::vector<char> introduced_first(total, 0);
  for (int b = 1; b < bag_count; ++b)
    if (bag_in_first[b]) introduced_first[t.certificate[b - 1].vertex] = 1;

  std::vector<Vertex> sep = dec.bags[separator];
  std::sort(sep.begin(), sep.end());
  std::vector<char> in_sep(total, 0);
  for (Vertex v : sep) in_sep[v] = 1;

  SplitResult out;
  out.first_to_original = sep;
  out.second_to_original = sep;
  for (Vertex v = 0; v < total; ++v) {
    if (in_sep[v]) continue;
    (introduced_first[v] ? out.first_to_original : out.second_to_original).push_back(v);
  }

  auto build = [&](const std::vector<Vertex>& to_original, bool first) {
    std::vector<Vertex> local(total, -1);
    for (std::size_t i = 0; i < to_original.size(); ++i) local[to_original[i]] = static_cast<Vertex>(i);
    RootedPartialKTree part;
    part.graph = t.graph.induced(to_original);
    part.k = k;
    part.roots.resize(k + 1);
    std::iota(part.roots.begin(), part.roots.end(), 0);

    std::vector<int> bag_index(bag_count, -1);
    std::vector<std::vector<Vertex>> bags;
    auto take = [&](int b) {
      bag_index[b] = static_cast<int>(bags.size());
      std::vector<Vertex> mapped;
      for (Vertex v : dec.bags[b]) mapped.push_back(local[v]);
      bags.push_back(std::move(mapped));
    };
    take(separator);
    for (int b = 0; b < bag_count; ++b) {
      if (b == separator) continue;
      if (static_cast<bool>(bag_in_first[b]) == first) take(b);
    }
    std::vector<std::pair<int, int>> edges;
    for (int b = 1; b < bag_count; ++b) {
      int p = dec.parent[b];
      if (bag_index[b] < 0 || bag_index[p] < 0) continue;
      edges.emplace_back(bag_index[b], bag_index[p]);
    }
    auto cert = certificate_from_decomposition(part.graph, part.roots, bags, edges, 0, k);
    if (!cert) throw LemmaViolation("split: decomposition wider than k");
    part.certificate = std::move(*cert);
    return part;
  };
  out.first = build(out.first_to_original, true);
  out.second = build(out.second_to_original, false);
  return out;
}

RootedPartialKTree reroot(const RootedPartialKTree& t, int bag) {
  if (Validation v = validate(t); !v) throw InvalidCertificate("reroot: " + v.violation);
  const Decomposition dec = decomposition_of(t);
  if (bag < 0 || bag >= static_cast<int>(dec.bags.size())) throw std::out_of_range("reroot: bag index");
  std::vector<std::pair<int, int>> edges;
  for (int b = 1; b < static_cast<int>(dec.bags.size()); ++b) edges.emplace_back(b, dec.parent[b]);
  RootedPartialKTree out;
  out.graph = t.graph;
  out.k = t.k;
  out.roots = dec.bags[bag];
  std::sort(out.roots.begin(), out.roots.end());
  auto cert = certificate_from_decomposition(out.graph, out.roots, dec.bags, edges, bag, t.k);
  if (!cert) throw LemmaViolation("reroot: decomposition wider than k");
  out.certificate = std::move(*cert);
  return out;
}

}  // namespace circk
