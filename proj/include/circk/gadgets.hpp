#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circk/circular.hpp"
#include "circk/ktree.hpp"
#include "circk/precolor.hpp"
#include "circk/type_matrix.hpp"

namespace circk {

enum class GadgetStatus { exhaustive_to_cap, budget_limited };

struct Gadget {
  TypeMatrix type;
  RootedPartialKTree tree;
  FSet fset;
  GadgetStatus status = GadgetStatus::exhaustive_to_cap;
  // No bipartite graph of this type up to the cap had a non-extending root
  // coloring (or none had this type at all): the gadget is k+1 isolated roots.
  bool fallback = false;
  // Searched graphs that had exactly this type.
  std::uint64_t graphs_of_type = 0;
};

struct GadgetOptions {
  int k = 1;
  PQParams pq{5, 2};
  int d = 1;
  std::int64_t type_bound = 4;
  int vertex_cap = 10;
  double budget_seconds = 60.0;
};

struct GadgetTable {
  GadgetOptions options;
  std::vector<Gadget> entries;
  int max_order() const;
};

// For every bipartite type with entries in 1..type_bound or infinity, glues
// together one witness per root coloring that fails to extend to some
// certified bipartite graph of that type (up to vertex_cap vertices). The
// search is shared across types. Throws LemmaViolation when a glued gadget's
// type differs from its entry.
GadgetTable synthesize_gadgets(const GadgetOptions& options);

nlohmann::json to_json(const GadgetTable& table);
GadgetTable gadget_table_from_json(const nlohmann::json& j);

// JSON helpers shared with the command line: null for infinity.
nlohmann::json type_to_json(const TypeMatrix& m);
TypeMatrix type_from_json(const nlohmann::json& j);

struct SpotCheck {
  std::size_t entry = 0;
  int sampled = 0;
  int attempts = 0;
  bool ok = true;
  std::string failure;
};

// For each entry, samples certified bipartite graphs until `samples` of them
// have the entry's type (or attempts run out) and checks F(gadget) is inside
// F(sample).
std::vector<SpotCheck> spot_check(const GadgetTable& table, int samples, std::uint64_t seed,
                                  int max_attempts = 200000);

}  // namespace circk
