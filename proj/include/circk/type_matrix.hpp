#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circk/ktree.hpp"
#include "circk/length.hpp"

namespace circk {

// (k+1)x(k+1) matrix of root-to-root distances. Symmetric, zero exactly on
// the diagonal, entries positive integers or infinity.
class TypeMatrix {
 public:
  TypeMatrix() = default;
  // All off-diagonal entries infinite.
  explicit TypeMatrix(int k);

  int k() const { return k_; }
  int order() const { return k_ + 1; }
  Length operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order() + j]; }
  void set(int i, int j, Length value);

  // Symmetry, diagonal, positivity and the triangle inequality.
  bool valid() const;
  bool all_infinite() const;
  Length max_finite_entry() const;  // 0 when nothing is finite

  // One row per line, entries separated by spaces, "inf" for infinity.
  std::string to_string() const;

  friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;

 private:
  int k_ = 0;
  std::vector<Length> entries_{Length(0)};
};

TypeMatrix type_of(const RootedPartialKTree& t);
TypeMatrix type_of_roots(const Graph& g, std::span<const Vertex> roots);

// Every triple of pairwise-finite entries sums to an even number.
bool is_bipartite_type(const TypeMatrix& m);

// Same parity wherever both are finite. Throws KMismatch.
bool compatible(const TypeMatrix& a, const TypeMatrix& b);

// a is below b: compatible and entrywise a <= b (infinity is maximal).
bool leq(const TypeMatrix& a, const TypeMatrix& b);

inline constexpr std::uint64_t kDefaultTypeLimit = 10'000'000;

// All valid bipartite types with off-diagonal entries in {1..bound} and
// infinity, in lexicographic order of the upper triangle read row by row
// (finite values ascending, infinity last). Throws BudgetExhausted when
// (bound+1)^(k(k+1)/2) exceeds limit.
std::vector<TypeMatrix> enumerate_bipartite_types(int k, std::int64_t bound,
                                                  std::uint64_t limit = kDefaultTypeLimit);

struct GlueTypeReport {
  TypeMatrix first;
  TypeMatrix second;
  TypeMatrix glued;
  bool types_compatible = false;
  bool glued_bipartite = false;
  bool lower_bound_holds = false;
  bool ok() const { return types_compatible && glued_bipartite && lower_bound_holds; }
};

// Gluing two bipartite rooted graphs whose types both dominate the bipartite
// type m0: asserts compatible types, a bipartite result, and m0 below the
// glued type. Throws PreconditionFailed on bad inputs and LemmaViolation (with
// the instance dump) if any assertion fails.
GlueTypeReport check_glue_type(const RootedPartialKTree& a, const RootedPartialKTree& b, const TypeMatrix& m0);

}  // namespace circk
