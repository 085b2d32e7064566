#include "circk/reduction.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "circk/errors.hpp"
#include "circk/graph_io.hpp"

namespace circk {

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t saturating_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

// One class's shrinking copy of the input.
struct ClassCopy {
  Graph graph;
  std::vector<Side> side;
  std::vector<std::vector<Vertex>> members;
  std::vector<Vertex> original_to_current;  // -1 when discarded
};

ClassCopy restrict_to_class(const Graph& g, const std::vector<Side>& side, std::span<const Vertex> class_roots) {
  const std::vector<int> comp = components(g);
  std::vector<char> wanted(g.vertex_count(), 0);
  for (Vertex r : class_roots) wanted[comp[r]] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (wanted[comp[v]]) keep.push_back(v);
  ClassCopy c;
  c.graph = g.induced(keep);
  c.original_to_current.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    c.side.push_back(side[keep[i]]);
    c.members.push_back({keep[i]});
    c.original_to_current[keep[i]] = static_cast<Vertex>(i);
  }
  return c;
}

void contract(ClassCopy& c, Vertex v) {
  Contraction con = contract_closed_neighborhood(c.graph, v);
  const int n = con.graph.vertex_count();
  std::vector<Side> side(n, Side::red);
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex u = 0; u < c.graph.vertex_count(); ++u) {
    const Vertex to = con.mapping[u];
    if (to != con.merged) side[to] = c.side[u];
    members[to].insert(members[to].end(), c.members[u].begin(), c.members[u].end());
  }
  std::sort(members[con.merged].begin(), members[con.merged].end());
  for (Vertex& x : c.original_to_current)
    if (x >= 0) x = con.mapping[x];
  c.graph = std::move(con.graph);
  c.side = std::move(side);
  c.members = std::move(members);
}

std::string dump(const RootedPartialKTree& t, const TypeMatrix& m) {
  std::ostringstream out;
  out << "type:\n" << m.to_string() << format_graph_text(t);
  return out.str();
}

}  // namespace

ReductionResult reduce_type(const RootedPartialKTree& t, const ReductionParams& params) {
  if (params.d < 1) throw std::invalid_argument("reduce_type needs d >= 1");
  const auto parts = bipartition(t.graph);
  if (!std::holds_alternative<Bipartition>(parts)) throw NotBipartite("reduce_type: input graph has an odd cycle");
  const std::vector<Side> side = std::get<Bipartition>(parts).sides();
  const int k = t.k;
  const int order = k + 1;
  const TypeMatrix m = type_of(t);
  const std::int64_t big_d = params.big_d();

  ReductionResult result;
  ReductionTrace& trace = result.trace;
  trace.structural_only = params.structural_only();
  const int levels = order * order;
  trace.i0 = 0;
  for (int i = 1; i <= levels; ++i) {
    const std::int64_t lo = saturating_pow(big_d, i - 1);
    const std::int64_t hi_pow = saturating_pow(big_d, i);
    const std::int64_t hi = hi_pow == kSaturated ? kSaturated : hi_pow - 1;
    trace.intervals_checked.emplace_back(lo, hi);
    bool hit = false;
    for (int a = 0; a < order && !hit; ++a)
      for (int b = a + 1; b < order && !hit; ++b)
        hit = m(a, b).finite() && m(a, b).value() >= lo && m(a, b).value() <= hi;
    if (!hit) {
      trace.i0 = i;
      break;
    }
  }
  if (trace.i0 == 0) throw LemmaViolation("reduce_type: every interval holds an entry\n" + dump(t, m));
  trace.threshold = saturating_pow(big_d, trace.i0 - 1);

  if (trace.i0 == 1) {
    result.reduced = isolated_roots(k);
    trace.predicted_type = TypeMatrix(k);
    for (int i = 0; i < order; ++i) {
      trace.classes.push_back({i});
      trace.contraction_log.emplace_back();
      result.origin.push_back({t.roots[i]});
    }
    trace.certificate_rebuilt = true;
    return result;
  }

  auto close = [&](int a, int b) { return a == b || (m(a, b).finite() && m(a, b).value() <= trace.threshold); };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (close(a, b) && close(b, c) && !close(a, c))
          throw NonEquivalenceCloseness("reduce_type: closeness is not transitive on roots " + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + "\n" + dump(t, m));
  std::vector<int> class_of(order, -1);
  for (int a = 0; a < order; ++a) {
    if (class_of[a] >= 0) continue;
    class_of[a] = static_cast<int>(trace.classes.size());
    trace.classes.push_back({a});
    for (int b = a + 1; b < order; ++b)
      if (close(a, b)) {
        class_of[b] = class_of[a];
        trace.classes.back().push_back(b);
      }
  }
  trace.predicted_type = TypeMatrix(k);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (class_of[a] == class_of[b]) trace.predicted_type.set(a, b, m(a, b));

  std::vector<ClassCopy> copies;
  for (const auto& cls : trace.classes) {
    std::vector<Vertex> class_roots;
    for (int r : cls) class_roots.push_back(t.roots[r]);
    ClassCopy c = restrict_to_class(t.graph, side, class_roots);
    std::vector<Vertex>& log = trace.contraction_log.emplace_back();
    while (true) {
      std::vector<Vertex> sources;
      for (Vertex r : class_roots) sources.push_back(c.original_to_current[r]);
      const std::vector<Length> dist = distances(c.graph, sources);
      const int n = c.graph.vertex_count();
      Vertex pick = -1;
      for (int i = 0; i < n; ++i) {
        const Vertex v = params.order == ContractionOrder::lowest_index ? i : n - 1 - i;
        if (c.side[v] == Side::blue && dist[v] >= Length(trace.threshold)) {
          pick = v;
          break;
        }
      }
      if (pick < 0) break;
      log.push_back(c.members[pick].front());
      contract(c, pick);
    }
    copies.push_back(std::move(c));
  }

  // Disjoint union in class order.
  RootedPartialKTree& out = result.reduced;
  out.k = k;
  int total = 0;
  std::vector<int> offset;
  for (const ClassCopy& c : copies) {
    offset.push_back(total);
    total += c.graph.vertex_count();
  }
  out.graph = Graph(total);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (const Edge& e : copies[i].graph.edges()) out.graph.add_edge(e.u + offset[i], e.v + offset[i]);
    for (const auto& mem : copies[i].members) result.origin.push_back(mem);
  }
  for (int a = 0; a < order; ++a) {
    const int ci = class_of[a];
    out.roots.push_back(copies[ci].original_to_current[t.roots[a]] + offset[ci]);
  }

  if (validate(t)) {
    const Decomposition dec = decomposition_of(t);
    const int bag_count = static_cast<int>(dec.bags.size());
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < copies.size(); ++i) {
      const int base = static_cast<int>(bags.size());
      for (int b = 0; b < bag_count; ++b) {
        std::vector<Vertex> mapped;
        for (Vertex v : dec.bags[b]) {
          const Vertex x = copies[i].original_to_current[v];
          if (x >= 0) mapped.push_back(x + offset[i]);
        }
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        bags.push_back(std::move(mapped));
        if (b > 0) edges.emplace_back(base + b, base + dec.parent[b]);
      }
    }
    const int root_bag = static_cast<int>(bags.size());
    bags.push_back(out.roots);
    for (std::size_t i = 0; i < copies.size(); ++i) edges.emplace_back(root_bag, static_cast<int>(i) * bag_count);
    auto cert = certificate_from_decomposition(out.graph, out.roots, bags, edges, root_bag, k);
    if (!cert) throw LemmaViolation("reduce_type: contracted decomposition wider than k\n" + dump(t, m));
    out.certificate = std::move(*cert);
    trace.certificate_rebuilt = true;
  }
  return result;
}

ReductionCheck check_reduction(const RootedPartialKTree& input, const ReductionResult& result,
                               const ReductionParams& params) {
  ReductionCheck check;
  const RootedPartialKTree& out = result.reduced;
  check.bipartite = is_bipartite(out.graph);
  const TypeMatrix got = type_of(out);
  check.type_matches = got == result.trace.predicted_type;
  check.dominates = leq(type_of(input), result.trace.predicted_type);
  const int order = input.k + 1;
  const std::int64_t cap = saturating_pow(params.big_d(), order * order);
  check.entries_bounded = true;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (got(a, b).finite() && got(a, b).value() > cap) check.entries_bounded = false;
  check.certificate_valid = result.trace.certificate_rebuilt && static_cast<bool>(validate(out));
  return check;
}

InclusionReport verify_f_inclusion(const RootedPartialKTree& original, const RootedPartialKTree& reduced,
                                   const PQParams& pq, int d) {
  InclusionReport report{true, d, std::nullopt, f_set(original, pq), f_set(reduced, pq)};
  for (std::size_t i = 0; i < report.reduced.size(); ++i) {
    if (report.reduced.contains(i) && !report.original.contains(i)) {
      report.included = false;
      report.counterexample = FSet::decode(i, original.k, pq.p);
      break;
    }
  }
  return report;
}

}  // namespace circk
