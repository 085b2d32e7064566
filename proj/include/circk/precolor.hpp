#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circk/circular.hpp"
#include "circk/ktree.hpp"

namespace circk {

// Colors for some of the k+1 roots; unset roots are unconstrained.
class Precoloring {
 public:
  Precoloring(int k, int p);
  static Precoloring total(int p, std::span<const Color> colors);

  int k() const { return static_cast<int>(entries_.size()) - 1; }
  int p() const { return p_; }
  void set(int root, Color color);
  std::optional<Color> at(int root) const { return entries_.at(root); }
  bool is_total() const;
  std::vector<FixedColor> on_roots(std::span<const Vertex> roots) const;
  std::string to_string() const;

 private:
  int p_;
  std::vector<std::optional<Color>> entries_;
};

// Set of total root precolorings, as a bitset over all p^(k+1) of them.
// Index of (c_0, ..., c_k) is sum c_i p^i: root 0 is the least significant
// digit. Hex form is the bitset read as one integer, most significant digit
// first, ceil(p^(k+1)/4) digits.
class FSet {
 public:
  FSet(int k, int p);
  static FSet full(int k, int p);
  static FSet from_hex(int k, int p, const std::string& hex);

  int k() const { return k_; }
  int p() const { return p_; }
  std::size_t size() const { return size_; }
  bool contains(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1; }
  void insert(std::size_t index) { words_[index / 64] |= std::uint64_t{1} << (index % 64); }
  std::size_t count() const;
  bool is_full() const { return count() == size_; }
  bool is_subset_of(const FSet& other) const;
  FSet intersect(const FSet& other) const;
  std::string to_hex() const;

  static std::size_t index_of(std::span<const Color> colors, int p);
  static std::vector<Color> decode(std::size_t index, int k, int p);

  friend bool operator==(const FSet&, const FSet&) = default;

 private:
  void check_same_shape(const FSet& other) const;
  int k_;
  int p_;
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

// Whether the (possibly partial) root precoloring extends to all of t.
bool extends(const RootedPartialKTree& t, const Precoloring& c, const PQParams& pq,
             std::uint64_t state_limit = kDefaultStateLimit);

// F(t). One bag-tree sweep with a valid certificate, else one solver call per
// precoloring. Throws BudgetExhausted above state_limit precolorings.
FSet f_set(const RootedPartialKTree& t, const PQParams& pq, std::uint64_t state_limit = kDefaultStateLimit);

// Colors reachable at the far end of a path of `length` edges whose near end
// has start_color, sorted ascending.
std::vector<Color> spread(const PQParams& pq, Color start_color, int length);

struct ProbeInstance {
  Graph graph;
  std::vector<Vertex> precolored;
};

struct ProbeWitness {
  std::size_t instance = 0;
  Length distance;
  std::vector<Color> colors;  // one per precolored vertex, in order
};

struct ProbeResult {
  int d_hat = 1;
  // A failing precoloring at distance d_hat - 1, when one exists.
  std::optional<ProbeWitness> witness;
};

// Smallest d such that every corpus instance whose precolored vertices are
// pairwise at distance >= d extends under every precoloring. Corpus-relative.
ProbeResult probe_extension_distance(const PQParams& pq, std::span<const ProbeInstance> corpus);

// Minimum pairwise distance among the vertices (infinity when < 2 vertices or
// all in different components).
Length min_pairwise_distance(const Graph& g, std::span<const Vertex> vertices);

}  // namespace circk
