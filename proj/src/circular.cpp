#include "circk/circular.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "circk/errors.hpp"

namespace circk {
namespace {

void check_params(const PQParams& pq) {
  if (pq.p < 1 || pq.q < 1) throw std::invalid_argument("p and q must be positive");
  if (pq.p > kMaxColors)
    throw TooLarge("p=" + std::to_string(pq.p) + " exceeds " + std::to_string(kMaxColors) + " colors");
}

void check_fixed(const Graph& g, const PQParams& pq, std::span<const FixedColor> fixed) {
  for (const FixedColor& f : fixed) {
    if (f.vertex < 0 || f.vertex >= g.vertex_count())
      throw InvalidPrecoloring("precolored vertex " + std::to_string(f.vertex) + " does not exist");
    if (f.color < 0 || f.color >= pq.p)
      throw InvalidPrecoloring("color " + std::to_string(f.color) + " outside 0.." + std::to_string(pq.p - 1));
  }
}

std::uint64_t full_mask(int p) { return p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1; }

class PqSearch {
 public:
  PqSearch(const Graph& g, const PQParams& pq) : g_(g), pq_(pq) {
    compat_.assign(pq.p, 0);
    for (Color a = 0; a < pq.p; ++a)
      for (Color b = 0; b < pq.p; ++b)
        if (pq_compatible(pq, a, b)) compat_[a] |= std::uint64_t{1} << b;
  }

  std::optional<CircularColoring> run(std::span<const FixedColor> fixed) {
    const int n = g_.vertex_count();
    domain_.assign(n, full_mask(pq_.p));
    color_.assign(n, -1);
    std::vector<char> anchored(n, 0);
    for (const FixedColor& f : fixed) {
      if (color_[f.vertex] >= 0 && color_[f.vertex] != f.color) return std::nullopt;
      color_[f.vertex] = f.color;
      anchored[f.vertex] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] < 0) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (color_[w] >= 0) {
          if (!pq_compatible(pq_, color_[v], color_[w])) return std::nullopt;
        } else {
          domain_[w] &= compat_[color_[v]];
          if (domain_[w] == 0) return std::nullopt;
        }
      }
    }
    // Rotating every color preserves validity, so a component without
    // precolored vertices may pin its smallest vertex to color 0.
    std::vector<int> comp = components(g_);
    std::vector<char> comp_anchored(n, 0);
    for (Vertex v = 0; v < n; ++v)
      if (anchored[v]) comp_anchored[comp[v]] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!comp_anchored[comp[v]]) {
        comp_anchored[comp[v]] = 1;
        domain_[v] &= 1;
      }
    }
    if (!search()) return std::nullopt;
    return CircularColoring{color_};
  }

 private:
  bool search() {
    Vertex best = -1;
    int best_size = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] >= 0) continue;
      const int size = std::popcount(domain_[v]);
      if (best < 0 || size < best_size || (size == best_size && g_.degree(v) > g_.degree(best))) {
        best = v;
        best_size = size;
      }
    }
    if (best < 0) return true;
    std::uint64_t options = domain_[best];
    while (options) {
      const Color c = std::countr_zero(options);
      options &= options - 1;
      const std::size_t mark = trail_.size();
      color_[best] = c;
      bool ok = true;
      for (Vertex w : g_.neighbors(best)) {
        if (color_[w] >= 0) continue;
        const std::uint64_t narrowed = domain_[w] & compat_[c];
        if (narrowed != domain_[w]) {
          trail_.emplace_back(w, domain_[w]);
          domain_[w] = narrowed;
          if (narrowed == 0) {
            ok = false;
            break;
          }
        }
      }
      if (ok && search()) return true;
      while (trail_.size() > mark) {
        domain_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
      color_[best] = -1;
    }
    return false;
  }

  const Graph& g_;
  PQParams pq_;
  std::vector<std::uint64_t> compat_;
  std::vector<std::uint64_t> domain_;
  std::vector<Color> color_;
  std::vector<std::pair<Vertex, std::uint64_t>> trail_;
};

std::uint64_t checked_power(int base, int exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= static_cast<std::uint64_t>(base);
    if (value > limit)
      throw BudgetExhausted("p^(k+1) = " + std::to_string(base) + "^" + std::to_string(exponent) +
                            " exceeds the state limit " + std::to_string(limit));
  }
  return value;
}

// Feasibility tables over bag colorings, children before parents.
class BagTreeDp {
 public:
  BagTreeDp(const RootedPartialKTree& t, const PQParams& pq, std::span<const FixedColor> fixed,
            std::uint64_t state_limit)
      : t_(t), pq_(pq), dec_(decomposition_of(t)) {
    const int k = t.k;
    table_size_ = checked_power(pq.p, k + 1, state_limit);
    attach_size_ = table_size_ / static_cast<std::uint64_t>(pq.p);
    const int n = t.graph.vertex_count();
    allowed_.assign(n, full_mask(pq.p));
    for (const FixedColor& f : fixed) allowed_[f.vertex] &= std::uint64_t{1} << f.color;
    compute();
  }

  const std::vector<char>& root_table() const { return feasible_[0]; }

  std::optional<CircularColoring> witness() const {
    const auto& root = feasible_[0];
    auto it = std::find(root.begin(), root.end(), 1);
    if (it == root.end()) return std::nullopt;
    std::vector<Color> colors(t_.graph.vertex_count(), -1);
    decode(static_cast<std::uint64_t>(it - root.begin()), dec_.bags[0], colors);
    const int k = t_.k;
    for (std::size_t b = 1; b < dec_.bags.size(); ++b) {
      const auto& bag = dec_.bags[b];
      std::uint64_t index = 0;
      std::uint64_t weight = 1;
      for (int i = 0; i < k; ++i, weight *= pq_.p) index += static_cast<std::uint64_t>(colors[bag[i]]) * weight;
      Color x = 0;
      while (!feasible_[b][index + static_cast<std::uint64_t>(x) * attach_size_]) ++x;
      colors[bag[k]] = x;
    }
    return CircularColoring{std::move(colors)};
  }

 private:
  void decode(std::uint64_t index, const std::vector<Vertex>& bag, std::vector<Color>& colors) const {
    for (Vertex v : bag) {
      colors[v] = static_cast<Color>(index % pq_.p);
      index /= pq_.p;
    }
  }

  void compute() {
    const int bag_count = static_cast<int>(dec_.bags.size());
    const int width = t_.k + 1;
    std::vector<std::vector<int>> children(bag_count);
    for (int b = 1; b < bag_count; ++b) children[dec_.parent[b]].push_back(b);

    feasible_.assign(bag_count, {});
    std::vector<std::vector<char>> child_ok(bag_count);
    std::vector<int> digits(width);
    for (int b = bag_count - 1; b >= 0; --b) {
      const auto& bag = dec_.bags[b];
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < width; ++i)
        for (int j = i + 1; j < width; ++j)
          if (t_.graph.has_edge(bag[i], bag[j])) edges.emplace_back(i, j);
      // For each child, where its attachment vertices sit in this bag.
      std::vector<std::vector<int>> positions;
      for (int c : children[b]) {
        std::vector<int> pos;
        const auto& cbag = dec_.bags[c];
        for (int i = 0; i + 1 < width; ++i)
          pos.push_back(static_cast<int>(std::find(bag.begin(), bag.end(), cbag[i]) - bag.begin()));
        positions.push_back(std::move(pos));
      }

      auto& table = feasible_[b];
      table.assign(table_size_, 0);
      std::fill(digits.begin(), digits.end(), 0);
      for (std::uint64_t index = 0; index < table_size_; ++index) {
        if (index) {
          for (int i = 0; i < width; ++i) {
            if (++digits[i] < pq_.p) break;
            digits[i] = 0;
          }
        }
        bool ok = true;
        for (int i = 0; i < width && ok; ++i) ok = (allowed_[bag[i]] >> digits[i]) & 1;
        for (std::size_t e = 0; e < edges.size() && ok; ++e)
          ok = pq_compatible(pq_, digits[edges[e].first], digits[edges[e].second]);
        for (std::size_t c = 0; c < children[b].size() && ok; ++c) {
          std::uint64_t sub = 0;
          std::uint64_t weight = 1;
          for (int pos : positions[c]) {
            sub += static_cast<std::uint64_t>(digits[pos]) * weight;
            weight *= pq_.p;
          }
          ok = child_ok[children[b][c]][sub];
        }
        table[index] = ok ? 1 : 0;
      }
      if (b > 0) {
        auto& summary = child_ok[b];
        summary.assign(attach_size_, 0);
        for (std::uint64_t index = 0; index < table_size_; ++index)
          if (table[index]) summary[index % attach_size_] = 1;
      }
      for (int c : children[b]) {
        child_ok[c].clear();
        child_ok[c].shrink_to_fit();
      }
    }
  }

  const RootedPartialKTree& t_;
  PQParams pq_;
  Decomposition dec_;
  std::uint64_t table_size_ = 0;
  std::uint64_t attach_size_ = 0;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::vector<char>> feasible_;
};

}  // namespace

bool is_valid_coloring(const Graph& g, const PQParams& pq, const CircularColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) return false;
  for (Color x : c.colors)
    if (x < 0 || x >= pq.p) return false;
  for (const Edge& e : g.edges())
    if (!pq_compatible(pq, c.colors[e.u], c.colors[e.v])) return false;
  return true;
}

std::optional<CircularColoring> is_pq_colorable(const Graph& g, const PQParams& pq,
                                                std::span<const FixedColor> fixed) {
  check_params(pq);
  check_fixed(g, pq, fixed);
  return PqSearch(g, pq).run(fixed);
}

std::optional<CircularColoring> is_pq_colorable(const RootedPartialKTree& t, const PQParams& pq,
                                                std::span<const FixedColor> fixed, std::uint64_t state_limit) {
  check_params(pq);
  check_fixed(t.graph, pq, fixed);
  if (!validate(t)) return PqSearch(t.graph, pq).run(fixed);
  return BagTreeDp(t, pq, fixed, state_limit).witness();
}

std::vector<bool> root_extension_table(const RootedPartialKTree& t, const PQParams& pq, std::uint64_t state_limit) {
  check_params(pq);
  if (Validation v = validate(t); !v) throw InvalidCertificate("root_extension_table: " + v.violation);
  const BagTreeDp dp(t, pq, {}, state_limit);
  const auto& table = dp.root_table();
  return std::vector<bool>(table.begin(), table.end());
}

Rational circular_chromatic_number(const Graph& g) {
  if (g.edge_count() == 0) return {1, 1};
  if (is_bipartite(g)) return {2, 1};
  const std::int64_t n = g.vertex_count();
  std::vector<Rational> candidates;
  for (std::int64_t p = 3; p <= n; ++p)
    for (std::int64_t q = 1; 2 * q < p; ++q)
      if (std::gcd(p, q) == 1) candidates.push_back({p, q});
  std::sort(candidates.begin(), candidates.end(),
            [](const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; });
  for (const Rational& r : candidates) {
    if (is_pq_colorable(g, PQParams{static_cast<int>(r.num), static_cast<int>(r.den)})) return r;
  }
  throw LemmaViolation("no (p,q)-coloring with p <= |V|; the graph should be |V|-colorable");
}

bool hom_to_odd_cycle(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("hom_to_odd_cycle needs t >= 1");
  const int m = 2 * t + 1;
  const int n = g.vertex_count();
  // BFS order so each vertex after a component's first has an earlier neighbor.
  std::vector<Vertex> order;
  std::vector<Vertex> anchor(n, -1);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      Vertex u = order[head++];
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          anchor[w] = u;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<int> image(n, -1);
  auto adjacent_in_cycle = [m](int a, int b) {
    int d = (a - b + m) % m;
    return d == 1 || d == m - 1;
  };
  auto place = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    const Vertex v = order[idx];
    std::vector<int> options;
    if (anchor[v] < 0) {
      options = {0};
    } else {
      options = {(image[anchor[v]] + 1) % m, (image[anchor[v]] + m - 1) % m};
    }
    for (int x : options) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (image[w] >= 0 && !adjacent_in_cycle(image[w], x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[v] = x;
      if (self(self, idx + 1)) return true;
      image[v] = -1;
    }
    return false;
  };
  return place(place, 0);
}

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) throw TooLarge("chromatic_number is limited to 14 vertices");
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> color(n, -1);
  // Plain backtracking in vertex order; a vertex may open at most one new color.
  auto colorable = [&](int colors) {
    std::fill(color.begin(), color.end(), -1);
    auto go = [&](auto&& self, Vertex v, int used) -> bool {
      if (v == n) return true;
      for (int c = 0; c < std::min(colors, used + 1); ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
          if (color[w] == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        color[v] = c;
        if (self(self, v + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
      }
      return false;
    };
    return go(go, 0, 0);
  };
  for (int c = 2; c <= n; ++c)
    if (colorable(c)) return c;
  return n;
}

}  // namespace circk
