// circk: command-line front end for the circk library.
//
// Exit status: 0 success, 1 property violation, 2 usage, parse or
// precondition error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
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

using namespace circk;
using nlohmann::json;

namespace {

constexpr int kViolation = 1;
constexpr int kUsage = 2;

json length_json(Length l) { return l.finite() ? json(l.value()) : json(nullptr); }

RootedPartialKTree rooted_from(const GraphFile& file) {
  if (!file.rooted()) throw PreconditionFailed("graph file needs an 'r' line");
  return file.to_rooted();
}

std::vector<FixedColor> parse_precolor(const std::string& text, int n) {
  std::vector<FixedColor> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--precolor", "expected v=c, got '" + item + "'");
    const int v = std::stoi(item.substr(0, eq));
    const int c = std::stoi(item.substr(eq + 1));
    if (v < 1 || v > n) throw CLI::ValidationError("--precolor", "vertex " + std::to_string(v) + " out of range");
    out.push_back({v - 1, c});
  }
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular colorings of bounded treewidth graphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string graph_path;
  int p = 5, q = 2, d = 2, k = 1;

  auto* oddgirth = app.add_subcommand("oddgirth", "shortest odd cycle length (null when bipartite)");
  oddgirth->add_option("--graph", graph_path, "graph file")->required();
  oddgirth->callback([&] {
    const GraphFile f = read_graph_file(graph_path);
    print({{"odd_girth", length_json(odd_girth(f.graph))}});
  });

  auto* chic = app.add_subcommand("chi-c", "circular chromatic number");
  chic->add_option("--graph", graph_path, "graph file")->required();
  chic->callback([&] {
    const GraphFile f = read_graph_file(graph_path);
    print({{"status", "ok"}, {"value", circular_chromatic_number(f.graph).to_string()}});
  });

  std::string precolor;
  auto* pqcolor = app.add_subcommand("pq-color", "decide (p,q)-colorability, optionally extending a precoloring");
  pqcolor->add_option("--graph", graph_path, "graph file")->required();
  pqcolor->add_option("--p", p)->required();
  pqcolor->add_option("--q", q)->required();
  pqcolor->add_option("--precolor", precolor, "1-based v=c pairs, comma separated");
  pqcolor->callback([&] {
    const GraphFile f = read_graph_file(graph_path);
    const auto fixed = parse_precolor(precolor, f.graph.vertex_count());
    std::optional<CircularColoring> c;
    if (f.rooted() && validate(f.to_rooted())) c = is_pq_colorable(f.to_rooted(), {p, q}, fixed, state_limit_from_env());
    else c = is_pq_colorable(f.graph, {p, q}, fixed);
    json out{{"status", c ? "sat" : "unsat"}};
    if (c) out["witness"] = c->colors;
    print(out);
  });

  auto* fset = app.add_subcommand("fset", "root precolorings that extend");
  fset->add_option("--graph", graph_path, "rooted graph file")->required();
  fset->add_option("--p", p)->required();
  fset->add_option("--q", q)->required();
  fset->callback([&] {
    const RootedPartialKTree t = rooted_from(read_graph_file(graph_path));
    const FSet f = f_set(t, {p, q}, state_limit_from_env());
    json out{{"k", t.k}, {"p", p}, {"q", q}, {"count", f.count()}, {"hex", f.to_hex()}};
    if (t.k == 1) {
      json pairs = json::array();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f.contains(i)) pairs.push_back(FSet::decode(i, 1, p));
      out["pairs"] = std::move(pairs);
    }
    print(out);
  });

  bool type_json = false;
  auto* type = app.add_subcommand("type", "root distance matrix");
  type->add_option("--graph", graph_path, "rooted graph file")->required();
  type->add_flag("--json", type_json, "array of arrays, null for infinity");
  type->callback([&] {
    const TypeMatrix m = type_of(rooted_from(read_graph_file(graph_path)));
    if (type_json) print(type_to_json(m));
    else std::cout << m.to_string();
  });

  bool trace = false;
  auto* reduce = app.add_subcommand("reduce", "type reduction by neighborhood contraction");
  reduce->add_option("--graph", graph_path, "rooted bipartite graph file")->required();
  reduce->add_option("--p", p)->required();
  reduce->add_option("--q", q)->required();
  reduce->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  reduce->add_flag("--trace", trace, "include intervals, classes and contractions");
  reduce->callback([&] {
    const RootedPartialKTree t = rooted_from(read_graph_file(graph_path));
    ReductionParams params{{p, q}, d};
    const ReductionResult r = reduce_type(t, params);
    const ReductionCheck check = check_reduction(t, r, params);
    json out{{"graph", format_graph_text(r.reduced)},
             {"predicted_type", type_to_json(r.trace.predicted_type)},
             {"structural_only", r.trace.structural_only},
             {"checks",
              {{"bipartite", check.bipartite},
               {"type_matches", check.type_matches},
               {"dominates", check.dominates},
               {"entries_bounded", check.entries_bounded},
               {"certificate_valid", check.certificate_valid}}}};
    const bool certified = static_cast<bool>(validate(t));
    out["input_certified"] = certified;
    if (trace) {
      json intervals = json::array();
      for (auto [lo, hi] : r.trace.intervals_checked) intervals.push_back({lo, hi});
      out["trace"] = {{"i0", r.trace.i0},
                      {"threshold", r.trace.threshold},
                      {"intervals", intervals},
                      {"classes", r.trace.classes},
                      {"contractions", r.trace.contraction_log},
                      {"origin", r.origin}};
    }
    print(out);
    // Without an input certificate there is nothing to rebuild.
    if (!check.ok() && (certified || !check.bipartite || !check.type_matches || !check.dominates ||
                        !check.entries_bounded))
      exit_code = kViolation;
  });

  GadgetOptions gadget_options;
  std::string out_path;
  auto* gadgets = app.add_subcommand("gadgets", "synthesize the gadget table");
  gadgets->add_option("--k", gadget_options.k)->required();
  gadgets->add_option("--p", gadget_options.pq.p)->required();
  gadgets->add_option("--q", gadget_options.pq.q)->required();
  gadgets->add_option("--d", gadget_options.d)->required();
  gadgets->add_option("--type-bound", gadget_options.type_bound)->required();
  gadgets->add_option("--vertex-cap", gadget_options.vertex_cap);
  gadgets->add_option("--budget", gadget_options.budget_seconds, "seconds");
  gadgets->add_option("--out", out_path, "table.json")->required();
  gadgets->callback([&] {
    const GadgetTable table = synthesize_gadgets(gadget_options);
    std::ofstream(out_path) << to_json(table).dump(2) << '\n';
    json summary = json::array();
    for (const Gadget& g : table.entries)
      summary.push_back({{"type", type_to_json(g.type)},
                         {"order", g.tree.vertex_count()},
                         {"fset_count", g.fset.count()},
                         {"fallback", g.fallback}});
    print(summary);
  });

  bool print_value = false;
  auto* bound = app.add_subcommand("bound", "explicit odd-girth bound 3(k+1) 2^e");
  bound->add_option("--k", k)->required();
  bound->add_option("--p", p)->required();
  bound->add_option("--d", d)->required();
  bound->add_flag("--print-value", print_value, "print the full decimal value when materialized");
  bound->callback([&] {
    const BigBound b = girth_bound(k, p, d);
    json out{{"coefficient", b.coefficient.get_str()},
             {"exponent", b.exponent.get_str()},
             {"digits_estimate", b.digits_estimate.get_str()},
             {"materialized", b.value.has_value()}};
    if (b.digits_exact) out["digits_exact"] = *b.digits_exact;
    if (b.value && print_value) out["value"] = b.value->get_str();
    print(out);
    if (b.digits_exact && mpz_class(*b.digits_exact) != b.digits_estimate) exit_code = kViolation;
  });

  std::string corpus_dir;
  auto* probe = app.add_subcommand("probe-d", "empirical extension distance over a corpus");
  probe->add_option("--p", p)->required();
  probe->add_option("--q", q)->required();
  probe->add_option("--corpus", corpus_dir, "directory of graph files; the 'r' line lists precolored vertices")
      ->required()
      ->check(CLI::ExistingDirectory);
  probe->callback([&] {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<ProbeInstance> corpus;
    for (const auto& path : files) {
      GraphFile f = read_graph_file(path);
      corpus.push_back({std::move(f.graph), std::move(f.roots)});
    }
    const ProbeResult r = probe_extension_distance({p, q}, corpus);
    json out{{"d_hat", r.d_hat}, {"instances", corpus.size()}};
    if (r.witness)
      out["witness"] = {{"file", files[r.witness->instance].filename().string()},
                        {"distance", length_json(r.witness->distance)},
                        {"colors", r.witness->colors}};
    print(out);
  });

  int count = 500;
  std::uint64_t seed = 1;
  auto* lemma4 = app.add_subcommand("verify-lemma4", "random glue instances against the glue-type invariant");
  lemma4->add_option("--k", k)->required();
  lemma4->add_option("--count", count);
  lemma4->add_option("--seed", seed);
  lemma4->callback([&] {
    int violations = 0;
    for (int i = 0; i < count; ++i) {
      BipartiteSampleOptions o;
      o.k = k;
      o.n = k + 2 + i % 12;
      o.random_root_bag = true;
      o.window = i % 3;
      const GlueInstance inst = random_glue_instance(o, 0.3, mix_seed(seed, static_cast<std::uint64_t>(i)));
      try {
        check_glue_type(inst.first, inst.second, inst.m0);
      } catch (const LemmaViolation& e) {
        ++violations;
        std::cerr << e.what() << '\n';
      }
    }
    print({{"instances", count}, {"violations", violations}});
    if (violations) exit_code = kViolation;
  });

  ExperimentConfig cfg;
  int samples = 0, exhaustive = 0;
  std::string format = "json";
  bool no_runtime = false;
  auto* theorem = app.add_subcommand("verify-theorem", "colorability experiment over partial k-trees");
  theorem->add_option("--k", cfg.k)->required();
  theorem->add_option("--p", cfg.p)->required();
  theorem->add_option("--q", cfg.q)->required();
  theorem->add_option("--girth-floor", cfg.girth_floor);
  auto* sample_opt = theorem->add_option("--samples", samples, "sampled mode");
  auto* exhaustive_opt = theorem->add_option("--exhaustive", exhaustive, "exhaustive mode up to this many vertices");
  sample_opt->excludes(exhaustive_opt);
  theorem->add_option("--vertices", cfg.sample_vertices, "vertices per sample");
  theorem->add_option("--keep", cfg.keep_prob, "edge keep probability");
  theorem->add_option("--seed", cfg.seed);
  theorem->add_flag("--include-bipartite", cfg.include_bipartite);
  theorem->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  theorem->add_flag("--no-runtime", no_runtime, "omit runtime so reruns are byte-identical");
  theorem->add_option("--out", out_path);
  theorem->callback([&] {
    if (*exhaustive_opt) {
      cfg.mode = ExperimentMode::exhaustive;
      cfg.exhaustive_vertex_cap = exhaustive;
    } else if (*sample_opt) {
      cfg.mode = ExperimentMode::sampled;
      cfg.sample_count = samples;
    } else {
      throw CLI::RequiredError("--samples or --exhaustive");
    }
    const ExperimentReport r = run_verify_theorem(cfg);
    const std::string body = emit_report(r, format == "json" ? ReportFormat::json : ReportFormat::text, !no_runtime);
    if (out_path.empty()) std::cout << body;
    else std::ofstream(out_path) << body;
    for (const ExperimentRecord& rec : r.records)
      if (!rec.colorable && rec.odd_girth >= Length(r.threshold)) exit_code = kViolation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const LemmaViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
