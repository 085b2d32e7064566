#include "circk/type_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "circk/errors.hpp"
#include "circk/graph_io.hpp"

namespace circk {

TypeMatrix::TypeMatrix(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("TypeMatrix needs k >= 0");
  entries_.assign(static_cast<std::size_t>(order()) * order(), Length::infinity());
  for (int i = 0; i < order(); ++i) entries_[static_cast<std::size_t>(i) * order() + i] = Length(0);
}

void TypeMatrix::set(int i, int j, Length value) {
  entries_[static_cast<std::size_t>(i) * order() + j] = value;
  entries_[static_cast<std::size_t>(j) * order() + i] = value;
}

bool TypeMatrix::valid() const {
  const int n = order();
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != Length(0)) return false;
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
      if (i != j && (*this)(i, j) <= Length(0)) return false;
      for (int l = 0; l < n; ++l)
        if ((*this)(i, j) > (*this)(i, l) + (*this)(l, j)) return false;
    }
  }
  return true;
}

bool TypeMatrix::all_infinite() const {
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if ((*this)(i, j).finite()) return false;
  return true;
}

Length TypeMatrix::max_finite_entry() const {
  Length best(0);
  for (const Length& e : entries_)
    if (e.finite() && e > best) best = e;
  return best;
}

std::string TypeMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < order(); ++i) {
    for (int j = 0; j < order(); ++j) {
      if (j) out << ' ';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

TypeMatrix type_of_roots(const Graph& g, std::span<const Vertex> roots) {
  if (roots.empty()) throw std::invalid_argument("type_of needs at least one root");
  TypeMatrix m(static_cast<int>(roots.size()) - 1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::vector<Length> dist = distances(g, roots[i]);
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      m.set(static_cast<int>(i), static_cast<int>(j), dist[roots[j]]);
  }
  return m;
}

TypeMatrix type_of(const RootedPartialKTree& t) { return type_of_roots(t.graph, t.roots); }

bool is_bipartite_type(const TypeMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const Length a = m(i, j), b = m(j, l), c = m(i, l);
        if (a.finite() && b.finite() && c.finite() && (a.value() + b.value() + c.value()) % 2 != 0) return false;
      }
  return true;
}

bool compatible(const TypeMatrix& a, const TypeMatrix& b) {
  if (a.k() != b.k()) throw KMismatch("types over different k");
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j) {
      const Length x = a(i, j), y = b(i, j);
      if (x.finite() && y.finite() && (x.value() - y.value()) % 2 != 0) return false;
    }
  return true;
}

bool leq(const TypeMatrix& a, const TypeMatrix& b) {
  if (!compatible(a, b)) return false;
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

std::vector<TypeMatrix> enumerate_bipartite_types(int k, std::int64_t bound, std::uint64_t limit) {
  if (k < 0 || bound < 0) throw std::invalid_argument("enumerate_bipartite_types needs k, bound >= 0");
  const int slots = k * (k + 1) / 2;
  std::uint64_t combos = 1;
  for (int s = 0; s < slots; ++s) {
    if (combos > limit / static_cast<std::uint64_t>(bound + 1))
      throw BudgetExhausted("enumerate_bipartite_types: (bound+1)^(k(k+1)/2) exceeds " + std::to_string(limit));
    combos *= static_cast<std::uint64_t>(bound + 1);
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) cells.emplace_back(i, j);

  // Digit value v in 0..bound-1 means entry v+1; digit `bound` means infinity.
  std::vector<std::int64_t> digits(slots, 0);
  std::vector<TypeMatrix> out;
  TypeMatrix m(k);
  for (std::uint64_t step = 0; step < combos; ++step) {
    for (int s = 0; s < slots; ++s)
      m.set(cells[s].first, cells[s].second, digits[s] == bound ? Length::infinity() : Length(digits[s] + 1));
    if (m.valid() && is_bipartite_type(m)) out.push_back(m);
    for (int s = slots - 1; s >= 0; --s) {
      if (++digits[s] <= bound) break;
      digits[s] = 0;
    }
  }
  return out;
}

GlueTypeReport check_glue_type(const RootedPartialKTree& a, const RootedPartialKTree& b, const TypeMatrix& m0) {
  if (a.k != b.k || m0.k() != a.k) throw KMismatch("check_glue_type: k differs between inputs");
  if (!is_bipartite(a.graph) || !is_bipartite(b.graph))
    throw PreconditionFailed("check_glue_type: both operands must be bipartite");
  if (!m0.valid() || !is_bipartite_type(m0)) throw PreconditionFailed("check_glue_type: m0 is not a bipartite type");
  GlueTypeReport report;
  report.first = type_of(a);
  report.second = type_of(b);
  if (!leq(m0, report.first) || !leq(m0, report.second))
    throw PreconditionFailed("check_glue_type: m0 is not below both operand types");
  const RootedPartialKTree glued = glue(a, b);
  report.glued = type_of(glued);
  report.types_compatible = compatible(report.first, report.second);
  report.glued_bipartite = is_bipartite(glued.graph);
  report.lower_bound_holds = leq(m0, report.glued);
  if (!report.ok()) {
    std::ostringstream dump;
    dump << "glue type invariant violated (compatible=" << report.types_compatible
         << " bipartite=" << report.glued_bipartite << " lower_bound=" << report.lower_bound_holds << ")\n"
         << "m0:\n" << m0.to_string() << "first:\n" << format_graph_text(a) << "second:\n" << format_graph_text(b);
    throw LemmaViolation(dump.str());
  }
  return report;
}

}  // namespace circk
