// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "circk/bound.hpp"
#include "circk/circular.hpp"
#include "circk/errors.hpp"
#include "circk/experiment.hpp"
#include "circk/gadgets.hpp"
#include "circk/generate.hpp"
#include "circk/graph_io.hpp"
#include "circk/precolor.hpp"
#include "circk/reduction.hpp"
#include "circk/type_matrix.hpp"
#include "support.hpp"

using namespace circk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

Outcome with_deadline(Outcome o, Clock::time_point start, double limit) {
  const double used = seconds_since(start);
  if (used >= limit) o.pass = false;
  o.detail += (o.detail.empty() ? "" : ", ") + fmt_seconds(used) + " (limit " + fmt_seconds(limit) + ")";
  return o;
}

Outcome odd_cycle_equivalence() {
  const auto start = Clock::now();
  const auto graphs = corpus::mixed(200, 1, 12);
  int mismatches = 0;
  for (int t = 1; t <= 4; ++t)
    for (const Graph& g : graphs)
      if (hom_to_odd_cycle(g, t) != is_pq_colorable(g, {2 * t + 1, t}).has_value()) ++mismatches;
  return with_deadline({mismatches == 0, std::to_string(mismatches) + " mismatches over 800 checks"}, start, 120);
}

Outcome exact_values() {
  int wrong = 0;
  for (int t = 1; t <= 5; ++t)
    if (circular_chromatic_number(cycle_graph(2 * t + 1)) != Rational{2 * t + 1, t}) ++wrong;
  for (int n = 2; n <= 5; ++n)
    if (circular_chromatic_number(complete_graph(n)) != Rational{n, 1}) ++wrong;
  int bipartite = 0, checked = 0;
  for (const Graph& g : corpus::mixed(200, 1, 12)) {
    const Rational chi_c = circular_chromatic_number(g);
    if (is_bipartite(g) && g.edge_count() > 0) {
      ++bipartite;
      if (chi_c != Rational{2, 1}) ++wrong;
    }
    const std::int64_t ceiling = (chi_c.num + chi_c.den - 1) / chi_c.den;
    if (ceiling != chromatic_number(g)) ++wrong;
    ++checked;
  }
  return {wrong == 0 && bipartite > 0, std::to_string(wrong) + " wrong values; " + std::to_string(checked) +
                                           " corpus graphs, " + std::to_string(bipartite) + " bipartite"};
}

Outcome glue_type_invariant() {
  const auto start = Clock::now();
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    BipartiteSampleOptions o;
    o.k = 1 + i % 3;
    o.n = o.k + 2 + i % 15;
    o.window = i % 4;
    o.random_root_bag = true;
    const GlueInstance inst = random_glue_instance(o, 0.3, mix_seed(2025, i));
    try {
      check_glue_type(inst.first, inst.second, inst.m0);
    } catch (const LemmaViolation& e) {
      ++violations;
      std::cerr << e.what() << '\n';
    }
  }
  return with_deadline({violations == 0, std::to_string(violations) + " violations over 500 instances"}, start, 120);
}

Outcome reduction_structure() {
  const auto start = Clock::now();
  std::mt19937_64 rng(4242);
  int failures = 0, contracted = 0, nonconfluent = 0;
  for (int i = 0; i < 300; ++i) {
    BipartiteSampleOptions o;
    o.k = std::uniform_int_distribution<int>(1, 2)(rng);
    o.n = std::uniform_int_distribution<int>(o.k + 1, 60)(rng);
    o.edge_keep_prob = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    o.window = std::uniform_int_distribution<int>(0, 3)(rng);
    o.random_root_bag = true;
    const RootedPartialKTree t = random_bipartite_partial_k_tree(o, mix_seed(4242, i));
    ReductionParams params{{5, 2}, 1 + i % 2};
    try {
      const ReductionResult r = reduce_type(t, params);
      if (!check_reduction(t, r, params).ok()) ++failures;
      for (const auto& log : r.trace.contraction_log)
        if (!log.empty()) {
          ++contracted;
          break;
        }
      if (i < 100) {
        params.order = ContractionOrder::highest_index;
        const ReductionResult other = reduce_type(t, params);
        if (!oracle::isomorphic(r.reduced.graph, r.reduced.roots, other.reduced.graph, other.reduced.roots))
          ++nonconfluent;
      }
    } catch (const Error& e) {
      ++failures;
      std::cerr << e.what() << '\n';
    }
  }
  return with_deadline({failures == 0 && nonconfluent == 0,
                        std::to_string(failures) + " postcondition failures over 300, " +
                            std::to_string(nonconfluent) + " non-isomorphic of 100 order swaps, " +
                            std::to_string(contracted) + " instances contracted"},
                       start, 300);
}

Outcome reduction_semantics() {
  const auto instances = corpus::structured(17);
  std::vector<ProbeInstance> probe;
  for (const RootedPartialKTree& t : instances) probe.push_back({t.graph, t.roots});
  const ProbeResult probed = probe_extension_distance({5, 2}, probe);
  int violations = 0, shrunk = 0;
  for (const RootedPartialKTree& t : instances) {
    const ReductionResult r = reduce_type(t, {{5, 2}, probed.d_hat, probed.d_hat});
    if (r.reduced.vertex_count() < t.vertex_count()) ++shrunk;
    const InclusionReport rep = verify_f_inclusion(t, r.reduced, {5, 2}, probed.d_hat);
    if (!rep.included) {
      ++violations;
      std::cerr << "inclusion fails:\n" << format_graph_text(t);
    }
  }
  return {violations == 0, "d_hat=" + std::to_string(probed.d_hat) + ", " + std::to_string(instances.size()) +
                               " instances, " + std::to_string(shrunk) + " shrunk, " + std::to_string(violations) +
                               " violations"};
}

std::size_t transform(std::size_t index, int k, int p, const std::function<Color(Color)>& f) {
  auto colors = FSet::decode(index, k, p);
  for (auto& c : colors) c = f(c);
  return FSet::index_of(colors, p);
}

Outcome fset_laws() {
  int violations = 0;
  for (PQParams pq : {PQParams{5, 2}, PQParams{7, 3}}) {
    for (int k = 1; k <= 2; ++k) {
      const auto a = corpus::rooted(100, k, 600 + k, 10);
      const auto b = corpus::rooted(100, k, 700 + k, 10);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const FSet f = f_set(a[i], pq);
        for (std::size_t x = 0; x < f.size(); ++x) {
          if (f.contains(x) != f.contains(transform(x, k, pq.p, [&](Color c) { return (c + 1) % pq.p; }))) ++violations;
          if (f.contains(x) != f.contains(transform(x, k, pq.p, [&](Color c) { return (pq.p - c) % pq.p; }))) ++violations;
        }
        if (f_set(glue(a[i], b[i]), pq) != f.intersect(f_set(b[i], pq))) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over 200 instances per (p,q)"};
}

Outcome spread_table() {
  const std::vector<std::vector<Color>> expected = {{2, 3}, {0, 1, 4}, {1, 2, 3, 4}, {0, 1, 2, 3, 4}};
  int wrong = 0;
  for (int len = 1; len <= 4; ++len) {
    const auto got = spread({5, 2}, 0, len);
    if (got != expected[len - 1]) ++wrong;
    if (std::vector<int>(got.begin(), got.end()) != oracle::path_spread(5, 2, 0, len)) ++wrong;
  }
  return {wrong == 0, std::to_string(wrong) + " mismatched rows"};
}

Outcome bound_value() {
  const auto start = Clock::now();
  const BigBound b = girth_bound(1, 3, 1);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 131584);
  expected *= 6;
  const bool exact = b.exponent == 131584 && b.value && *b.value == expected;
  const bool digits = b.digits_exact && mpz_class(static_cast<unsigned long>(*b.digits_exact)) == b.digits_estimate &&
                      *b.digits_exact == expected.get_str().size();
  return with_deadline({exact && digits, "e=" + b.exponent.get_str() + ", digits " +
                                             (b.digits_exact ? std::to_string(*b.digits_exact) : "?") + " vs estimate " +
                                             b.digits_estimate.get_str()},
                       start, 1);
}

Outcome gadget_sanity() {
  GadgetOptions o;
  o.k = 1;
  o.pq = {5, 2};
  o.d = 1;
  o.type_bound = 4;
  const GadgetTable table = synthesize_gadgets(o);
  bool isolated = false;
  for (const Gadget& g : table.entries)
    if (g.type == TypeMatrix(1))
      isolated = g.fallback && g.tree.vertex_count() == 2 && g.tree.graph.edge_count() == 0 && g.fset.is_full();
  int failures = 0, sampled = 0;
  for (const SpotCheck& s : spot_check(table, 50, 9)) {
    sampled += s.sampled;
    if (!s.ok) {
      ++failures;
      std::cerr << s.failure << '\n';
    }
  }
  return {isolated && failures == 0, std::to_string(table.entries.size()) + " entries, isolated gadget " +
                                         (isolated ? "ok" : "missing") + ", " + std::to_string(sampled) +
                                         " same-type samples, " + std::to_string(failures) + " failing entries"};
}

Outcome theorem_regression(const std::filesystem::path& snapshot_path) {
  const auto start = Clock::now();
  ExperimentConfig c;
  c.k = 2;
  c.p = 5;
  c.q = 2;
  c.mode = ExperimentMode::exhaustive;
  c.exhaustive_vertex_cap = 11;
  const ExperimentReport first = run_verify_theorem(c);
  const std::string body = emit_report(first, ReportFormat::json, false);
  const std::string again = emit_report(run_verify_theorem(c), ReportFormat::json, false);
  const std::string digest = sha256_hex(body);
  std::ostringstream detail;
  detail << "graphs " << first.graphs_examined << ", threshold " << first.threshold << ", digest "
         << digest.substr(0, 16);
  bool pass = body == again;
  if (!pass) detail << ", rerun differs";
  std::ifstream in(snapshot_path);
  if (!in) {
    detail << ", snapshot missing: " << snapshot_path.string();
    pass = false;
  } else {
    const nlohmann::json snap = nlohmann::json::parse(in);
    const bool same = snap.at("threshold").get<int>() == first.threshold &&
                      snap.at("graphs_examined").get<std::uint64_t>() == first.graphs_examined &&
                      snap.at("report_sha256").get<std::string>() == digest;
    if (!same) detail << ", snapshot differs";
    pass = pass && same;
  }
  return with_deadline({pass, detail.str()}, start, 1800);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path snapshot = CIRCK_SNAPSHOT_DIR "/verify_theorem_k2_p5_q2_cap11.json";
  if (argc > 1) snapshot = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"odd-cycle equivalence", odd_cycle_equivalence},
      {"exact circular chromatic values", exact_values},
      {"glue type invariant", glue_type_invariant},
      {"reduction postconditions and confluence", reduction_structure},
      {"reduction F-set inclusion at probed d", reduction_semantics},
      {"F-set laws", fset_laws},
      {"spread table", spread_table},
      {"girth bound materialization", bound_value},
      {"gadget table sanity", gadget_sanity},
      {"exhaustive k=2 regression", [&] { return theorem_regression(snapshot); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failed;
}
