#include "circk/precolor.hpp"

#include <bit>
#include <stdexcept>

#include "circk/errors.hpp"

namespace circk {

Precoloring::Precoloring(int k, int p) : p_(p), entries_(k + 1) {
  if (k < 0 || p < 1) throw std::invalid_argument("Precoloring needs k >= 0 and p >= 1");
}

Precoloring Precoloring::total(int p, std::span<const Color> colors) {
  Precoloring c(static_cast<int>(colors.size()) - 1, p);
  for (std::size_t i = 0; i < colors.size(); ++i) c.set(static_cast<int>(i), colors[i]);
  return c;
}

void Precoloring::set(int root, Color color) {
  if (root < 0 || root >= static_cast<int>(entries_.size()))
    throw InvalidPrecoloring("root index " + std::to_string(root) + " out of range");
  if (color < 0 || color >= p_) throw InvalidPrecoloring("color " + std::to_string(color) + " out of range");
  entries_[root] = color;
}

bool Precoloring::is_total() const {
  for (const auto& e : entries_)
    if (!e) return false;
  return true;
}

std::vector<FixedColor> Precoloring::on_roots(std::span<const Vertex> roots) const {
  if (roots.size() != entries_.size()) throw KMismatch("precoloring and root tuple differ in size");
  std::vector<FixedColor> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i]) out.push_back({roots[i], *entries_[i]});
  return out;
}

std::string Precoloring::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i] ? std::to_string(*entries_[i]) : "_";
  }
  return out + ")";
}

FSet::FSet(int k, int p) : k_(k), p_(p), size_(1) {
  if (k < 0 || p < 1) throw std::invalid_argument("FSet needs k >= 0 and p >= 1");
  for (int i = 0; i <= k; ++i) {
    if (size_ > (std::size_t{1} << 40) / static_cast<std::size_t>(p)) throw BudgetExhausted("FSet too large");
    size_ *= static_cast<std::size_t>(p);
  }
  words_.assign((size_ + 63) / 64, 0);
}

FSet FSet::full(int k, int p) {
  FSet f(k, p);
  for (std::size_t i = 0; i < f.size_; ++i) f.insert(i);
  return f;
}

std::size_t FSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void FSet::check_same_shape(const FSet& other) const {
  if (k_ != other.k_ || p_ != other.p_) throw KMismatch("FSets over different (k, p)");
}

bool FSet::is_subset_of(const FSet& other) const {
  check_same_shape(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

FSet FSet::intersect(const FSet& other) const {
  check_same_shape(other);
  FSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

std::string FSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (size_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t index = 4 * d + b;
      if (index < size_ && contains(index)) nibble |= 1u << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

FSet FSet::from_hex(int k, int p, const std::string& hex) {
  FSet f(k, p);
  const std::size_t digits = (f.size_ + 3) / 4;
  if (hex.size() != digits) throw std::invalid_argument("FSet hex has wrong length");
  for (std::size_t d = 0; d < digits; ++d) {
    const char ch = hex[digits - 1 - d];
    unsigned nibble;
    if (ch >= '0' && ch <= '9') nibble = ch - '0';
    else if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
    else throw std::invalid_argument("FSet hex has a non-hex digit");
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const std::size_t index = 4 * d + b;
      if (index >= f.size_) throw std::invalid_argument("FSet hex sets a bit past the end");
      f.insert(index);
    }
  }
  return f;
}

std::size_t FSet::index_of(std::span<const Color> colors, int p) {
  std::size_t index = 0;
  std::size_t weight = 1;
  for (Color c : colors) {
    index += static_cast<std::size_t>(c) * weight;
    weight *= static_cast<std::size_t>(p);
  }
  return index;
}

std::vector<Color> FSet::decode(std::size_t index, int k, int p) {
  std::vector<Color> colors(k + 1);
  for (auto& c : colors) {
    c = static_cast<Color>(index % p);
    index /= p;
  }
  return colors;
}

bool extends(const RootedPartialKTree& t, const Precoloring& c, const PQParams& pq, std::uint64_t state_limit) {
  const auto fixed = c.on_roots(t.roots);
  return is_pq_colorable(t, pq, fixed, state_limit).has_value();
}

FSet f_set(const RootedPartialKTree& t, const PQParams& pq, std::uint64_t state_limit) {
  FSet out(t.k, pq.p);
  if (out.size() > state_limit)
    throw BudgetExhausted("f_set: " + std::to_string(out.size()) + " precolorings exceed the state limit");
  if (validate(t)) {
    const std::vector<bool> table = root_extension_table(t, pq, state_limit);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i]) out.insert(i);
    return out;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::vector<Color> colors = FSet::decode(i, t.k, pq.p);
    std::vector<FixedColor> fixed;
    for (std::size_t r = 0; r < colors.size(); ++r) fixed.push_back({t.roots[r], colors[r]});
    if (is_pq_colorable(t.graph, pq, fixed)) out.insert(i);
  }
  return out;
}

std::vector<Color> spread(const PQParams& pq, Color start_color, int length) {
  if (!pq.above_two()) throw std::invalid_argument("spread needs p/q > 2");
  if (start_color < 0 || start_color >= pq.p) throw InvalidPrecoloring("start color out of range");
  if (length < 0) throw std::invalid_argument("negative path length");
  std::vector<char> current(pq.p, 0);
  current[start_color] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<char> next(pq.p, 0);
    for (Color a = 0; a < pq.p; ++a) {
      if (!current[a]) continue;
      for (Color b = 0; b < pq.p; ++b)
        if (pq_compatible(pq, a, b)) next[b] = 1;
    }
    current = std::move(next);
  }
  std::vector<Color> out;
  for (Color c = 0; c < pq.p; ++c)
    if (current[c]) out.push_back(c);
  return out;
}

Length min_pairwise_distance(const Graph& g, std::span<const Vertex> vertices) {
  Length best = Length::infinity();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::vector<Length> dist = distances(g, vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j) best = std::min(best, dist[vertices[j]]);
  }
  return best;
}

ProbeResult probe_extension_distance(const PQParams& pq, std::span<const ProbeInstance> corpus) {
  if (corpus.empty()) throw EmptyCorpus("probe_extension_distance: empty corpus");
  if (!pq.above_two()) throw PreconditionFailed("probe_extension_distance needs p/q > 2");
  ProbeResult result;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const ProbeInstance& inst = corpus[idx];
    if (!is_bipartite(inst.graph))
      throw PreconditionFailed("probe corpus instance " + std::to_string(idx) + " is not bipartite");
    const int m = static_cast<int>(inst.precolored.size());
    if (m < 2) throw PreconditionFailed("probe corpus instance " + std::to_string(idx) + " precolors fewer than 2 vertices");
    const Length delta = min_pairwise_distance(inst.graph, inst.precolored);
    // Only instances that could raise the current answer need checking.
    if (delta.finite() && delta.value() + 1 <= result.d_hat) continue;

    // Extendability is invariant under rotating all colors, so the first
    // precolored vertex can be held at color 0.
    std::vector<Color> colors(m, 0);
    bool failed = false;
    while (true) {
      std::vector<FixedColor> fixed;
      for (int i = 0; i < m; ++i) fixed.push_back({inst.precolored[i], colors[i]});
      if (!is_pq_colorable(inst.graph, pq, fixed)) {
        failed = true;
        break;
      }
      int i = 1;
      while (i < m && ++colors[i] == pq.p) colors[i++] = 0;
      if (i == m) break;
    }
    if (!failed) continue;
    if (delta.is_infinite())
      throw LemmaViolation("probe: precoloring of vertices in distinct bipartite components failed to extend");
    result.d_hat = static_cast<int>(delta.value()) + 1;
    result.witness = ProbeWitness{idx, delta, colors};
  }
  return result;
}

}  // namespace circk
