#include "circk/canonical.hpp"

#include <algorithm>
#include <map>

#include "circk/errors.hpp"

namespace circk {
namespace {

// Individualization-refinement search for the lexicographically smallest
// adjacency string over all leaves of the search tree.
class CanonicalSearch {
 public:
  CanonicalSearch(int n, std::span<const std::uint8_t> matrix) : n_(n), matrix_(matrix) {}

  std::string run(std::vector<int> cells) {
    refine(cells);
    search(cells);
    return std::to_string(n_) + ":" + best_;
  }

 private:
  std::uint8_t at(int u, int v) const { return matrix_[u * n_ + v]; }

  static int cell_count(const std::vector<int>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  // Equitable refinement. New cells are ordered by (old cell, neighbor
  // profile), which depends only on isomorphism-invariant data.
  void refine(std::vector<int>& cells) const {
    int count = cell_count(cells);
    while (true) {
      std::vector<std::vector<int>> signature(n_);
      for (int v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.push_back(cells[v]);
        std::vector<int> profile;
        for (int u = 0; u < n_; ++u)
          if (u != v && at(v, u) != 0) profile.push_back(cells[u] * 256 + at(v, u));
        std::sort(profile.begin(), profile.end());
        sig.insert(sig.end(), profile.begin(), profile.end());
      }
      std::map<std::vector<int>, int> rank;
      for (const auto& sig : signature) rank.emplace(sig, 0);
      int next = 0;
      for (auto& [sig, r] : rank) r = next++;
      for (int v = 0; v < n_; ++v) cells[v] = rank[signature[v]];
      if (next == count) return;
      count = next;
    }
  }

  bool twins(int a, int b) const {
    for (int x = 0; x < n_; ++x) {
      if (x == a || x == b) continue;
      if (at(a, x) != at(b, x)) return false;
    }
    return true;
  }

  void search(const std::vector<int>& cells) {
    const int count = cell_count(cells);
    if (count == n_) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[cells[v]] = v;
      std::string leaf;
      leaf.reserve(n_ * (n_ - 1) / 2);
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) leaf.push_back(static_cast<char>('0' + at(order[i], order[j])));
      if (!have_best_ || leaf < best_) {
        best_ = std::move(leaf);
        have_best_ = true;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(count, 0);
    for (int v = 0; v < n_; ++v) ++size[cells[v]];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (cells[v] == target) members.push_back(v);
    // Swapping two twins is an automorphism fixing everything individualized
    // so far, so one representative per twin class suffices.
    std::vector<int> representatives;
    for (int v : members) {
      bool covered = false;
      for (int r : representatives)
        if (twins(r, v)) {
          covered = true;
          break;
        }
      if (!covered) representatives.push_back(v);
    }
    for (int v : representatives) {
      std::vector<int> next = cells;
      for (int u = 0; u < n_; ++u) {
        if (cells[u] > target || (cells[u] == target && u != v)) ++next[u];
      }
      refine(next);
      search(next);
    }
  }

  int n_;
  std::span<const std::uint8_t> matrix_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(int n, std::span<const std::uint8_t> matrix,
                           std::span<const Vertex> distinguished) {
  if (n > kCanonicalFormCap)
    throw TooLarge("canonical_form supports at most " + std::to_string(kCanonicalFormCap) +
                   " vertices, got " + std::to_string(n));
  if (n == 0) return "0:";
  std::vector<int> cells(n, static_cast<int>(distinguished.size()));
  for (std::size_t i = 0; i < distinguished.size(); ++i) cells[distinguished[i]] = static_cast<int>(i);
  // Compact in case every vertex is distinguished.
  std::vector<int> used(cells);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& c : cells) c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  std::string prefix;
  if (!distinguished.empty()) prefix = "r" + std::to_string(distinguished.size()) + ";";
  return prefix + CanonicalSearch(n, matrix).run(std::move(cells));
}

std::string canonical_form(const Graph& g, std::span<const Vertex> distinguished) {
  const int n = g.vertex_count();
  if (n > kCanonicalFormCap)
    throw TooLarge("canonical_form supports at most " + std::to_string(kCanonicalFormCap) +
                   " vertices, got " + std::to_string(n));
  std::vector<std::uint8_t> matrix(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    matrix[e.u * n + e.v] = 1;
    matrix[e.v * n + e.u] = 1;
  }
  return canonical_form(n, matrix, distinguished);
}

std::string canonical_form(const Graph& g) { return canonical_form(g, {}); }

}  // namespace circk
