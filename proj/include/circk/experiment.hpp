#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circk/circular.hpp"
#include "circk/ktree.hpp"
#include "circk/length.hpp"

namespace circk {

enum class ExperimentMode { sampled, exhaustive };

struct ExperimentConfig {
  int k = 2;
  int p = 5;
  int q = 2;
  int girth_floor = 3;
  ExperimentMode mode = ExperimentMode::sampled;
  int sample_count = 100;
  int sample_vertices = 12;
  double keep_prob = 0.7;
  int exhaustive_vertex_cap = 8;
  std::uint64_t seed = 1;
  // Bipartite graphs are always colorable; by default they are only counted
  // in the summary.
  bool include_bipartite = false;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ExperimentRecord {
  std::uint64_t id = 0;
  int vertices = 0;
  int edges = 0;
  Length odd_girth;
  bool colorable = true;
  // First 16 hex digits of SHA-256 over the graph's text form and the verdict.
  std::string witness_hash;
  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct GirthSummary {
  Length odd_girth;
  std::uint64_t graphs = 0;
  std::uint64_t failures = 0;
  friend bool operator==(const GirthSummary&, const GirthSummary&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRecord> records;  // ascending id
  std::vector<GirthSummary> summary;      // ascending odd girth, infinity last
  std::uint64_t graphs_examined = 0;
  // One above the largest odd girth of a non-colorable graph, and never below
  // the floor.
  int threshold = 3;
  std::int64_t runtime_ms = 0;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

inline constexpr int kReportSchemaVersion = 1;

// Sampled: graph i is random_partial_k_tree(k, sample_vertices, keep_prob,
// girth_floor, mix_seed(seed, i)). Exhaustive: every partial k-tree up to the
// vertex cap, ids in enumeration order (by size, then canonical string).
// Colorability goes through hom_to_odd_cycle when p/q = (2t+1)/t.
// The observer, when given, sees every recorded graph with its record.
using RecordObserver = std::function<void(const ExperimentRecord&, const RootedPartialKTree&)>;
ExperimentReport run_verify_theorem(const ExperimentConfig& config, const RecordObserver& observer = {});

enum class ReportFormat { json, text };

// Stable field order, one record per line in JSON. Without runtime the output is a pure function of the
// config.
std::string emit_report(const ExperimentReport& report, ReportFormat format, bool include_runtime = true);
ExperimentReport report_from_json(const nlohmann::json& j);

// Hex SHA-256 of the data.
std::string sha256_hex(const std::string& data);

// Solver state limit, overridable with CIRCK_STATE_LIMIT.
std::uint64_t state_limit_from_env();

}  // namespace circk
