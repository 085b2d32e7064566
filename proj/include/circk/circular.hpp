#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circk/graph.hpp"
#include "circk/ktree.hpp"

namespace circk {

using Color = int;

// Colors 0..p-1; adjacent colors a, b need q <= |a-b| <= p-q. Not reduced.
struct PQParams {
  int p = 0;
  int q = 1;
  // p/q > 2
  bool above_two() const { return p > 2 * q; }
  friend bool operator==(const PQParams&, const PQParams&) = default;
};

inline bool pq_compatible(const PQParams& pq, Color a, Color b) {
  const int diff = a > b ? a - b : b - a;
  return pq.q <= diff && diff <= pq.p - pq.q;
}

struct FixedColor {
  Vertex vertex;
  Color color;
};

struct CircularColoring {
  std::vector<Color> colors;
};

// True when every edge satisfies the (p,q) constraint.
bool is_valid_coloring(const Graph& g, const PQParams& pq, const CircularColoring& c);

inline constexpr int kMaxColors = 64;
inline constexpr std::uint64_t kDefaultStateLimit = 1'000'000;

// Backtracking with forward checking. Returns a coloring extending `fixed`
// or nullopt. Throws InvalidPrecoloring for colors outside 0..p-1 and
// TooLarge when p exceeds kMaxColors.
std::optional<CircularColoring> is_pq_colorable(const Graph& g, const PQParams& pq,
                                                std::span<const FixedColor> fixed = {});

// Dynamic programming over the certificate's bag tree when the certificate
// validates; falls back to backtracking otherwise. Throws BudgetExhausted
// when p^(k+1) exceeds state_limit.
std::optional<CircularColoring> is_pq_colorable(const RootedPartialKTree& t, const PQParams& pq,
                                                std::span<const FixedColor> fixed = {},
                                                std::uint64_t state_limit = kDefaultStateLimit);

// Bag-tree DP table at the root clique: entry i (mixed radix, root 0 least
// significant) is true iff that root coloring extends. Needs a valid
// certificate.
std::vector<bool> root_extension_table(const RootedPartialKTree& t, const PQParams& pq,
                                       std::uint64_t state_limit = kDefaultStateLimit);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Minimum p/q with a (p,q)-coloring: 1 for edgeless graphs, 2 for bipartite
// graphs with an edge, otherwise the smallest colorable reduced fraction
// with p <= |V|.
Rational circular_chromatic_number(const Graph& g);

// Direct homomorphism search into the cycle of length 2t+1.
bool hom_to_odd_cycle(const Graph& g, int t);

// Exact chromatic number; throws TooLarge above 14 vertices.
int chromatic_number(const Graph& g);

}  // namespace circk
