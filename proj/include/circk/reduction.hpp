#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "circk/circular.hpp"
#include "circk/ktree.hpp"
#include "circk/precolor.hpp"
#include "circk/type_matrix.hpp"

namespace circk {

enum class ContractionOrder { lowest_index, highest_index };

struct ReductionParams {
  PQParams pq{5, 2};
  int d = 2;
  // Extension distance established elsewhere (e.g. by the probe); runs with
  // d below it are structural-only.
  std::optional<int> probed_d;
  ContractionOrder order = ContractionOrder::lowest_index;

  std::int64_t big_d() const { return 4 * static_cast<std::int64_t>(d); }
  bool structural_only() const { return d < 2 || (probed_d && d < *probed_d); }
};

struct ReductionTrace {
  int i0 = 1;
  // [D^(i-1), D^i - 1] for i = 1..i0, saturated at int64 max.
  std::vector<std::pair<std::int64_t, std::int64_t>> intervals_checked;
  std::int64_t threshold = 1;  // D^(i0-1)
  std::vector<std::vector<int>> classes;  // root indices, ascending
  // Per class, the original ids of the blue vertices whose closed
  // neighborhoods were contracted, in order.
  std::vector<std::vector<Vertex>> contraction_log;
  TypeMatrix predicted_type;
  bool certificate_rebuilt = false;
  bool structural_only = false;
};

struct ReductionResult {
  RootedPartialKTree reduced;
  ReductionTrace trace;
  // origin[v]: original vertices merged into output vertex v, ascending.
  std::vector<std::vector<Vertex>> origin;
};

// Requires d >= 1. Throws NotBipartite, and NonEquivalenceCloseness if the
// closeness relation is not transitive. A valid input certificate yields a
// rebuilt certificate for the output; otherwise the output has none.
ReductionResult reduce_type(const RootedPartialKTree& t, const ReductionParams& params);

struct ReductionCheck {
  bool bipartite = false;
  bool type_matches = false;   // type_of(output) == predicted
  bool dominates = false;      // type_of(input) below predicted
  bool entries_bounded = false;  // finite entries <= D^((k+1)^2)
  bool certificate_valid = false;
  bool ok() const { return bipartite && type_matches && dominates && entries_bounded && certificate_valid; }
};

ReductionCheck check_reduction(const RootedPartialKTree& input, const ReductionResult& result,
                               const ReductionParams& params);

struct InclusionReport {
  bool included = true;
  int d = 0;
  // A root coloring extending to the reduced graph but not the original.
  std::optional<std::vector<Color>> counterexample;
  FSet original;
  FSet reduced;
};

// F(reduced) subset of F(original). Throws BudgetExhausted via f_set.
InclusionReport verify_f_inclusion(const RootedPartialKTree& original, const RootedPartialKTree& reduced,
                                   const PQParams& pq, int d);

}  // namespace circk
