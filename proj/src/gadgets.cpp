#include "circk/gadgets.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "circk/enumerate.hpp"
#include "circk/errors.hpp"
#include "circk/generate.hpp"
#include "circk/graph_io.hpp"

namespace circk {

int GadgetTable::max_order() const {
  int best = 0;
  for (const Gadget& g : entries) best = std::max(best, g.tree.vertex_count());
  return best;
}

GadgetTable synthesize_gadgets(const GadgetOptions& options) {
  if (!options.pq.above_two()) throw PreconditionFailed("synthesize_gadgets needs p/q > 2");
  const int k = options.k;
  const std::vector<TypeMatrix> types = enumerate_bipartite_types(k, options.type_bound);
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < types.size(); ++i) index_of.emplace(types[i].to_string(), i);

  const std::size_t colorings = FSet(k, options.pq.p).size();
  std::vector<RootedPartialKTree> witnesses;
  std::vector<std::vector<int>> witness_of(types.size(), std::vector<int>(colorings, -1));
  std::vector<std::uint64_t> seen_of_type(types.size(), 0);

  EnumerationOptions enumeration;
  enumeration.k = k;
  enumeration.max_vertices = options.vertex_cap;
  enumeration.rooted = true;
  enumeration.bipartite_only = true;
  enumeration.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(options.budget_seconds));
  const EnumerationStatus status =
      enumerate_partial_k_trees(enumeration, [&](int, const std::vector<EnumeratedGraph>& level) {
        for (const EnumeratedGraph& item : level) {
          auto it = index_of.find(type_of(item.tree).to_string());
          if (it == index_of.end()) continue;
          const std::size_t ti = it->second;
          ++seen_of_type[ti];
          const FSet f = f_set(item.tree, options.pq);
          int stored = -1;
          for (std::size_t c = 0; c < colorings; ++c) {
            if (f.contains(c) || witness_of[ti][c] >= 0) continue;
            if (stored < 0) {
              stored = static_cast<int>(witnesses.size());
              witnesses.push_back(item.tree);
            }
            witness_of[ti][c] = stored;
          }
        }
        return true;
      });

  GadgetTable table;
  table.options = options;
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    std::vector<int> used;
    for (int w : witness_of[ti])
      if (w >= 0 && std::find(used.begin(), used.end(), w) == used.end()) used.push_back(w);
    std::sort(used.begin(), used.end());
    Gadget g{types[ti], isolated_roots(k), FSet::full(k, options.pq.p),
             status == EnumerationStatus::complete ? GadgetStatus::exhaustive_to_cap : GadgetStatus::budget_limited,
             used.empty(), seen_of_type[ti]};
    if (!used.empty()) {
      RootedPartialKTree glued = witnesses[used[0]];
      for (std::size_t i = 1; i < used.size(); ++i) glued = glue(glued, witnesses[used[i]]);
      if (type_of(glued) != types[ti])
        throw LemmaViolation("gadget type differs from its entry\nexpected:\n" + types[ti].to_string() + "got:\n" +
                             type_of(glued).to_string() + format_graph_text(glued));
      g.fset = f_set(glued, options.pq);
      g.tree = std::move(glued);
    }
    table.entries.push_back(std::move(g));
  }
  return table;
}

nlohmann::json type_to_json(const TypeMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.order(); ++j) {
      if (m(i, j).finite()) row.push_back(m(i, j).value());
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TypeMatrix type_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("type must be a non-empty array of arrays");
  TypeMatrix m(static_cast<int>(j.size()) - 1);
  for (int i = 0; i < m.order(); ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != m.order())
      throw std::invalid_argument("type rows must be square");
    for (int c = i + 1; c < m.order(); ++c)
      m.set(i, c, j[i][c].is_null() ? Length::infinity() : Length(j[i][c].get<std::int64_t>()));
  }
  return m;
}

nlohmann::json to_json(const GadgetTable& table) {
  const GadgetOptions& o = table.options;
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = o.k;
  j["p"] = o.pq.p;
  j["q"] = o.pq.q;
  j["d"] = o.d;
  j["type_bound"] = o.type_bound;
  j["vertex_cap"] = o.vertex_cap;
  j["budget_seconds"] = o.budget_seconds;
  nlohmann::json entries = nlohmann::json::array();
  for (const Gadget& g : table.entries) {
    entries.push_back({{"type", type_to_json(g.type)},
                       {"graph", format_graph_text(g.tree)},
                       {"fset", g.fset.to_hex()},
                       {"status", g.status == GadgetStatus::exhaustive_to_cap ? "exhaustive" : "budget-limited"},
                       {"fallback", g.fallback},
                       {"graphs_of_type", g.graphs_of_type}});
  }
  j["entries"] = std::move(entries);
  return j;
}

GadgetTable gadget_table_from_json(const nlohmann::json& j) {
  GadgetTable table;
  GadgetOptions& o = table.options;
  o.k = j.at("k").get<int>();
  o.pq = {j.at("p").get<int>(), j.at("q").get<int>()};
  o.d = j.at("d").get<int>();
  o.type_bound = j.at("type_bound").get<std::int64_t>();
  o.vertex_cap = j.at("vertex_cap").get<int>();
  o.budget_seconds = j.at("budget_seconds").get<double>();
  for (const auto& e : j.at("entries")) {
    const RootedPartialKTree tree = parse_graph_text(e.at("graph").get<std::string>()).to_rooted();
    table.entries.push_back({type_from_json(e.at("type")), tree,
                             FSet::from_hex(o.k, o.pq.p, e.at("fset").get<std::string>()),
                             e.at("status").get<std::string>() == "exhaustive" ? GadgetStatus::exhaustive_to_cap
                                                                               : GadgetStatus::budget_limited,
                             e.at("fallback").get<bool>(), e.at("graphs_of_type").get<std::uint64_t>()});
  }
  return table;
}

std::vector<SpotCheck> spot_check(const GadgetTable& table, int samples, std::uint64_t seed, int max_attempts) {
  const GadgetOptions& o = table.options;
  std::vector<SpotCheck> out;
  for (std::size_t e = 0; e < table.entries.size(); ++e) {
    const Gadget& g = table.entries[e];
    SpotCheck check;
    check.entry = e;
    std::mt19937_64 rng(mix_seed(seed, e));
    while (check.sampled < samples && check.attempts < max_attempts) {
      BipartiteSampleOptions s;
      s.k = o.k;
      s.n = std::uniform_int_distribution<int>(o.k + 1, o.k + 11)(rng);
      s.edge_keep_prob = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
      s.window = std::uniform_int_distribution<int>(0, 3)(rng);
      s.random_root_bag = true;
      const RootedPartialKTree t = random_bipartite_partial_k_tree(s, rng());
      ++check.attempts;
      if (type_of(t) != g.type) continue;
      ++check.sampled;
      if (!g.fset.is_subset_of(f_set(t, o.pq))) {
        check.ok = false;
        check.failure = "gadget F-set not inside sample F-set\n" + format_graph_text(t);
        break;
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace circk
