#include "circk/experiment.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "circk/enumerate.hpp"
#include "circk/errors.hpp"
#include "circk/generate.hpp"
#include "circk/graph_io.hpp"

namespace circk {

namespace {

nlohmann::json length_json(Length l) { return l.finite() ? nlohmann::json(l.value()) : nlohmann::json(nullptr); }

Length length_from(const nlohmann::json& j) { return j.is_null() ? Length::infinity() : Length(j.get<std::int64_t>()); }

class Runner {
 public:
  Runner(const ExperimentConfig& c, const RecordObserver& observer) : c_(c), observer_(observer) {
    const int g = std::gcd(c.p, c.q);
    const int p = c.p / g, q = c.q / g;
    if (p % 2 == 1 && q == (p - 1) / 2) odd_cycle_t_ = q;
    state_limit_ = state_limit_from_env();
  }

  void examine(std::uint64_t id, const RootedPartialKTree& t) {
    ++report_.graphs_examined;
    const Length girth = odd_girth(t.graph);
    if (girth < Length(c_.girth_floor)) return;
    const bool bipartite = girth.is_infinite();
    bool colorable = true;
    if (!bipartite) {
      if (odd_cycle_t_ > 0) colorable = hom_to_odd_cycle(t.graph, odd_cycle_t_);
      else if (t.roots.empty()) colorable = is_pq_colorable(t.graph, {c_.p, c_.q}).has_value();
      else colorable = is_pq_colorable(t, {c_.p, c_.q}, {}, state_limit_).has_value();
    }
    GirthSummary& s = summary_[girth];
    s.odd_girth = girth;
    ++s.graphs;
    if (!colorable) ++s.failures;
    if (bipartite && !c_.include_bipartite) return;
    const std::string text = format_graph_text(t.graph);
    ExperimentRecord r{id, t.vertex_count(), t.graph.edge_count(), girth, colorable,
                       sha256_hex(text + (colorable ? "colorable" : "not-colorable")).substr(0, 16)};
    if (observer_) observer_(r, t);
    report_.records.push_back(std::move(r));
  }

  ExperimentReport finish() {
    report_.config = c_;
    std::sort(report_.records.begin(), report_.records.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& [girth, s] : summary_) report_.summary.push_back(s);
    report_.threshold = c_.girth_floor;
    for (const GirthSummary& s : report_.summary)
      if (s.failures > 0 && s.odd_girth.finite())
        report_.threshold = std::max<int>(report_.threshold, static_cast<int>(s.odd_girth.value()) + 1);
    return std::move(report_);
  }

 private:
  const ExperimentConfig& c_;
  const RecordObserver& observer_;
  int odd_cycle_t_ = 0;
  std::uint64_t state_limit_;
  std::map<Length, GirthSummary> summary_;
  ExperimentReport report_;
};

}  // namespace

std::uint64_t state_limit_from_env() {
  if (const char* env = std::getenv("CIRCK_STATE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateLimit;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < size; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

ExperimentReport run_verify_theorem(const ExperimentConfig& c, const RecordObserver& observer) {
  if (c.p <= 2 * c.q || c.q < 1) throw PreconditionFailed("verify-theorem needs p/q > 2");
  if (c.k < 1) throw PreconditionFailed("verify-theorem needs k >= 1");
  const auto start = std::chrono::steady_clock::now();
  Runner runner(c, observer);
  if (c.mode == ExperimentMode::sampled) {
    if (c.sample_count < 0 || c.sample_vertices < c.k + 1) throw PreconditionFailed("bad sample configuration");
    for (int i = 0; i < c.sample_count; ++i) {
      const RootedPartialKTree t = random_partial_k_tree(c.k, c.sample_vertices, c.keep_prob, Length(c.girth_floor),
                                                         mix_seed(c.seed, static_cast<std::uint64_t>(i)));
      runner.examine(static_cast<std::uint64_t>(i), t);
    }
  } else {
    EnumerationOptions options;
    options.k = c.k;
    options.max_vertices = c.exhaustive_vertex_cap;
    options.rooted = false;
    std::uint64_t id = 0;
    enumerate_partial_k_trees(options, [&](int, const std::vector<EnumeratedGraph>& level) {
      for (const EnumeratedGraph& item : level) runner.examine(id++, item.tree);
      return true;
    });
  }
  ExperimentReport report = runner.finish();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string emit_report(const ExperimentReport& r, ReportFormat format, bool include_runtime) {
  const ExperimentConfig& c = r.config;
  if (format == ReportFormat::text) {
    std::ostringstream out;
    out << "schema " << kReportSchemaVersion << '\n'
        << "config k=" << c.k << " p=" << c.p << " q=" << c.q << " girth_floor=" << c.girth_floor << " mode="
        << (c.mode == ExperimentMode::sampled ? "sampled" : "exhaustive");
    if (c.mode == ExperimentMode::sampled)
      out << " samples=" << c.sample_count << " vertices=" << c.sample_vertices << " keep=" << c.keep_prob
          << " seed=" << c.seed;
    else
      out << " vertex_cap=" << c.exhaustive_vertex_cap;
    out << " include_bipartite=" << c.include_bipartite << '\n';
    out << "graphs_examined " << r.graphs_examined << '\n' << "threshold " << r.threshold << '\n';
    for (const GirthSummary& s : r.summary)
      out << "odd_girth " << s.odd_girth << " graphs " << s.graphs << " failures " << s.failures << '\n';
    for (const ExperimentRecord& rec : r.records)
      out << "record " << rec.id << " n=" << rec.vertices << " m=" << rec.edges << " odd_girth=" << rec.odd_girth
          << " colorable=" << rec.colorable << " hash=" << rec.witness_hash << '\n';
    if (include_runtime) out << "runtime_ms " << r.runtime_ms << '\n';
    return out.str();
  }
  nlohmann::ordered_json cfg;
  cfg["k"] = c.k;
  cfg["p"] = c.p;
  cfg["q"] = c.q;
  cfg["girth_floor"] = c.girth_floor;
  cfg["mode"] = c.mode == ExperimentMode::sampled ? "sampled" : "exhaustive";
  cfg["sample_count"] = c.sample_count;
  cfg["sample_vertices"] = c.sample_vertices;
  cfg["keep_prob"] = c.keep_prob;
  cfg["exhaustive_vertex_cap"] = c.exhaustive_vertex_cap;
  cfg["seed"] = c.seed;
  cfg["include_bipartite"] = c.include_bipartite;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const GirthSummary& s : r.summary)
    summary.push_back({{"odd_girth", length_json(s.odd_girth)}, {"graphs", s.graphs}, {"failures", s.failures}});

  std::ostringstream out;
  out << "{\n\"schema\": " << kReportSchemaVersion << ",\n\"config\": " << cfg.dump()
      << ",\n\"graphs_examined\": " << r.graphs_examined << ",\n\"threshold\": " << r.threshold
      << ",\n\"summary\": " << summary.dump() << ",\n\"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const ExperimentRecord& rec = r.records[i];
    nlohmann::ordered_json e;
    e["id"] = rec.id;
    e["vertices"] = rec.vertices;
    e["edges"] = rec.edges;
    e["odd_girth"] = length_json(rec.odd_girth);
    e["colorable"] = rec.colorable;
    e["witness_hash"] = rec.witness_hash;
    out << (i ? ",\n" : "\n") << e.dump();
  }
  out << (r.records.empty() ? "]" : "\n]");
  if (include_runtime) out << ",\n\"runtime_ms\": " << r.runtime_ms;
  out << "\n}\n";
  return out.str();
}

ExperimentReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != kReportSchemaVersion) throw Error("unsupported report schema");
  ExperimentReport r;
  const auto& cfg = j.at("config");
  ExperimentConfig& c = r.config;
  c.k = cfg.at("k").get<int>();
  c.p = cfg.at("p").get<int>();
  c.q = cfg.at("q").get<int>();
  c.girth_floor = cfg.at("girth_floor").get<int>();
  c.mode = cfg.at("mode").get<std::string>() == "sampled" ? ExperimentMode::sampled : ExperimentMode::exhaustive;
  c.sample_count = cfg.at("sample_count").get<int>();
  c.sample_vertices = cfg.at("sample_vertices").get<int>();
  c.keep_prob = cfg.at("keep_prob").get<double>();
  c.exhaustive_vertex_cap = cfg.at("exhaustive_vertex_cap").get<int>();
  c.seed = cfg.at("seed").get<std::uint64_t>();
  c.include_bipartite = cfg.at("include_bipartite").get<bool>();
  r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
  r.threshold = j.at("threshold").get<int>();
  for (const auto& s : j.at("summary"))
    r.summary.push_back({length_from(s.at("odd_girth")), s.at("graphs").get<std::uint64_t>(),
                         s.at("failures").get<std::uint64_t>()});
  for (const auto& e : j.at("records"))
    r.records.push_back({e.at("id").get<std::uint64_t>(), e.at("vertices").get<int>(), e.at("edges").get<int>(),
                         length_from(e.at("odd_girth")), e.at("colorable").get<bool>(),
                         e.at("witness_hash").get<std::string>()});
  if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  return r;
}

}  // namespace circk
