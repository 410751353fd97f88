#include "hypersimp/cli.hpp"

#include <bit>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "hypersimp/io.hpp"
#include "hypersimp/pairs.hpp"
#include "hypersimp/report.hpp"

namespace hypersimp {
namespace {

constexpr const char* kTool = "hypersimp 0.1.0";

struct RunConfig {
  std::string input;
  std::string spec;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::optional<std::size_t> reps;
  std::vector<double> q;
  int min_size = 2;
  int max_size = 11;
  std::string out;
  std::string format = "pretty";
  std::string which;
  std::size_t rounds = 1000;
  std::size_t line_graph_cap = kDefaultLineGraphCap;
  std::string p_simple = "exact";
  bool timestamps = false;
  bool connected = false;
  bool legacy = false;
};

Preprocessed load_input(const RunConfig& cfg) {
  return preprocess(load_graph_file(cfg.input, cfg.timestamps), {cfg.min_size, cfg.max_size});
}

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out);
  return std::filesystem::path(cfg.out) / name;
}

void write_json(const std::filesystem::path& p, const Json& j) { write_file(p.string(), j.dump(2) + "\n"); }

Json input_block(const RunConfig& cfg, const Preprocessed& pre) {
  return {{"path", cfg.input},
          {"timestamps", cfg.timestamps},
          {"min_size", cfg.min_size},
          {"max_size", cfg.max_size},
          {"vertices", pre.graph.num_vertices()},
          {"edges", pre.graph.num_edges()},
          {"temporal", pre.graph.temporal()},
          {"dropped_by_size", pre.dropped_by_size},
          {"dropped_duplicates", pre.dropped_duplicates}};
}

PSimpleMethod parse_p_simple(const std::string& s) {
  if (s == "exact") return PSimpleMethod::exact;
  if (s == "monte-carlo") return PSimpleMethod::monte_carlo;
  throw Error("unknown --p-simple '" + s + "' (expected exact or monte-carlo)");
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto pre = load_input(cfg);
  const Hypergraph& g = pre.graph;
  EstimateOptions eo{cfg.samples, cfg.seed, parse_p_simple(cfg.p_simple)};
  auto report = build_report(count_pairs(g), estimate_expected_pairs(degree_sequence(g), edge_size_sequence(g), eo));
  if (cfg.legacy) report.legacy = legacy_measures(g);

  Json doc;
  doc["tool"] = kTool;
  doc["command"] = "analyze";
  doc["seed"] = cfg.seed;
  doc["samples"] = cfg.samples;
  doc["p_simple"] = cfg.p_simple;
  doc["input"] = input_block(cfg, pre);
  doc["report"] = to_json(report);

  if (!cfg.out.empty()) {
    std::vector<std::string> files{"report.json", "matrix.csv", "matrix.txt"};
    write_json(out_path(cfg, "report.json"), doc);
    write_file(out_path(cfg, "matrix.csv").string(), matrix_csv(report.matrix));
    write_file(out_path(cfg, "matrix.txt").string(), render_matrix(report.matrix));
    if (report.temporal_matrix) {
      write_file(out_path(cfg, "temporal_matrix.csv").string(), matrix_csv(*report.temporal_matrix));
      files.push_back("temporal_matrix.csv");
    }
    Json manifest = doc;
    manifest.erase("report");
    manifest["files"] = files;
    write_json(out_path(cfg, "manifest.json"), manifest);
    out << summary_row(g, report) << '\n';
    return 0;
  }
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << matrix_csv(report.matrix);
  } else {
    out << summary_row(g, report) << '\n' << render_matrix(report.matrix);
    if (report.temporal_matrix) out << "temporal:\n" << render_matrix(*report.temporal_matrix);
  }
  return 0;
}

int cmd_legacy(const RunConfig& cfg, std::ostream& out) {
  const auto pre = load_input(cfg);
  const auto m = legacy_measures(pre.graph);
  Json doc;
  doc["tool"] = kTool;
  doc["command"] = "legacy";
  doc["input"] = input_block(cfg, pre);
  doc["legacy"] = to_json(m);
  if (!cfg.out.empty()) write_json(out_path(cfg, "legacy.json"), doc);
  const auto sf = m.simplicial_fraction_defined ? format_number(m.simplicial_fraction) : "undefined";
  const auto fes = m.face_edit_simpliciality_defined ? format_number(m.face_edit_simpliciality) : "undefined";
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "sf,es,fes\n" << sf << ',' << format_number(m.edit_simpliciality) << ',' << fes << '\n';
  } else {
    out << "sf=" << sf << " es=" << format_number(m.edit_simpliciality) << " fes=" << fes << '\n';
  }
  return 0;
}

int cmd_generate(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
  if (cfg.out.empty()) throw Error("generate needs --out");
  GenSpec base;
  Json provenance;
  if (!cfg.spec.empty()) {
    base = genspec_from_json(Json::parse(read_file(cfg.spec)));
    provenance = {{"spec", cfg.spec}};
  } else if (!cfg.input.empty()) {
    const auto pre = load_input(cfg);
    base.degrees = degree_sequence(pre.graph);
    base.sizes = edge_size_sequence(pre.graph);
    provenance = {{"graph", input_block(cfg, pre)}};
  } else {
    throw Error("generate needs --spec or --input");
  }
  if (sub.count("--seed")) base.seed = cfg.seed;
  if (cfg.connected) base.require_connected = true;
  const std::vector<double> qs = cfg.q.empty() ? std::vector<double>{base.q} : cfg.q;

  Json manifest;
  manifest["tool"] = kTool;
  manifest["command"] = "generate";
  manifest["seed"] = base.seed;
  manifest["connected"] = base.require_connected;
  manifest["source"] = provenance;
  manifest["warnings"] = validate(base);
  Json graphs = Json::array();

  struct Row {
    double q;
    std::uint64_t seed;
    std::size_t edges, multiset, duplicates;
    PairCounts counts;
  };
  std::vector<Row> rows;
  std::set<SizePair> types;
  for (double q : qs) {
    GenSpec spec = base;
    spec.q = q;
    spec.seed = derive_seed(base.seed, stream_id("generate", std::bit_cast<std::uint64_t>(q)), 0);
    validate(spec);
    const auto simple = simplify(generate(spec));
    const auto measured = preprocess(simple.graph, {cfg.min_size, cfg.max_size});
    const auto counts = count_pairs(measured.graph);
    for (const auto& [key, c] : counts.by_type) types.insert(key);
    const std::string file = "graph_q" + format_number(q) + ".json";
    write_file(out_path(cfg, file).string(), to_canonical_json(simple.graph) + "\n");
    Json entry{{"file", file},
               {"q", q},
               {"seed", spec.seed},
               {"edges", simple.graph.num_edges()},
               {"multiset_edges", simple.multiset_edges},
               {"dropped_edges", simple.dropped_edges},
               {"duplicate_edges", measured.dropped_duplicates},
               {"pairs", counts.total}};
    if (spec.require_connected) entry["connected"] = is_connected(simple.graph);
    graphs.push_back(std::move(entry));
    rows.push_back({q, spec.seed, measured.graph.num_edges(), simple.multiset_edges, measured.dropped_duplicates,
                    counts});
  }

  std::ostringstream csv;
  csv << "q,seed,edges,multiset_edges,duplicate_edges,pairs";
  for (auto [i, j] : types) csv << ",pairs_" << i << '_' << j;
  csv << '\n';
  for (const auto& r : rows) {
    csv << format_number(r.q) << ',' << r.seed << ',' << r.edges << ',' << r.multiset << ',' << r.duplicates << ','
        << r.counts.total;
    for (const auto& key : types) {
      auto it = r.counts.by_type.find(key);
      csv << ',' << (it == r.counts.by_type.end() ? 0 : it->second);
    }
    csv << '\n';
  }
  write_file(out_path(cfg, "pair_counts.csv").string(), csv.str());
  manifest["graphs"] = std::move(graphs);
  manifest["pair_counts"] = "pair_counts.csv";
  write_json(out_path(cfg, "manifest.json"), manifest);
  out << "wrote " << rows.size() << " graph(s) to " << cfg.out << '\n';
  return 0;
}

int cmd_experiment(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) throw Error("experiment needs --out");
  const Experiment which = parse_experiment(cfg.which);
  const auto pre = load_input(cfg);
  const Hypergraph g = largest_component(pre.graph);

  SuiteOptions opts;
  if (!cfg.q.empty()) opts.q_values = cfg.q;
  opts.reps = cfg.reps.value_or(which == Experiment::adversarial_growth ? 20 : 10000);
  opts.real_reps = opts.reps;
  opts.rounds = cfg.rounds;
  opts.seed = cfg.seed;
  opts.line_graph_cap = cfg.line_graph_cap;
  opts.max_size = cfg.max_size;
  const auto series = run_experiment_suite(g, which, opts);

  Json manifest;
  manifest["tool"] = kTool;
  manifest["command"] = "experiment";
  manifest["which"] = to_string(which);
  manifest["seed"] = cfg.seed;
  manifest["reps"] = opts.reps;
  manifest["q_values"] = opts.q_values;
  manifest["line_graph_cap"] = opts.line_graph_cap;
  Json graph = input_block(cfg, pre);
  graph["largest_component"] = {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
  manifest["input"] = std::move(graph);
  if (which == Experiment::diffusion_single || which == Experiment::diffusion_fraction) {
    manifest["rounds"] = opts.rounds;
    manifest["statistic"] = "Wasserstein-1 to the uniform target under the discrete metric (half the L1 distance)";
  } else {
    manifest["statistic"] = "largest component size divided by |V|; raw counts in raw_mean/raw_std";
  }
  Json entries = Json::array();
  for (const auto& s : series) {
    const std::string file = s.q ? "q" + format_number(*s.q) + ".csv" : "real.csv";
    write_file(out_path(cfg, file).string(), curve_csv(s.curve));
    Json e{{"label", s.label}, {"file", file}, {"reps", s.curve.reps}, {"replicate_seeds", s.replicate_seeds}};
    e["q"] = s.q ? Json(*s.q) : Json(nullptr);
    entries.push_back(std::move(e));
  }
  manifest["series"] = std::move(entries);
  write_json(out_path(cfg, "manifest.json"), manifest);
  out << "wrote " << series.size() << " series to " << cfg.out << '\n';
  return 0;
}

void add_input(CLI::App* sub, RunConfig& cfg, bool required) {
  auto* opt = sub->add_option("--input,-i", cfg.input, "Edge list or incidence JSON file")->envname("HYPERSIMP_INPUT");
  if (required) opt->required();
  sub->add_flag("--timestamps", cfg.timestamps, "Edge-list lines start with a timestamp")
      ->envname("HYPERSIMP_TIMESTAMPS");
  sub->add_option("--min-size", cfg.min_size, "Smallest edge size kept")
      ->envname("HYPERSIMP_MIN_SIZE")
      ->check(CLI::Range(2, 1 << 20));
  sub->add_option("--max-size", cfg.max_size, "Largest edge size kept")
      ->envname("HYPERSIMP_MAX_SIZE")
      ->check(CLI::Range(2, 1 << 20));
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "Master seed")->envname("HYPERSIMP_SEED");
  sub->add_option("--out,-o", cfg.out, "Output directory")->envname("HYPERSIMP_OUT");
  sub->add_option("--format", cfg.format, "Console format")
      ->envname("HYPERSIMP_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simpliciality analysis of hypergraphs", "hypersimp"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Simplicial ratio, matrix and temporal ratios of a hypergraph");
  add_input(analyze, cfg, true);
  add_common(analyze, cfg);
  analyze->add_option("--samples,-s", cfg.samples, "Monte Carlo samples per edge size")
      ->envname("HYPERSIMP_SAMPLES")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--p-simple", cfg.p_simple, "exact or monte-carlo")
      ->envname("HYPERSIMP_P_SIMPLE")
      ->check(CLI::IsMember({"exact", "monte-carlo"}));
  analyze->add_flag("--legacy", cfg.legacy, "Also compute sf, es and fes");

  auto* legacy = app.add_subcommand("legacy", "Simplicial fraction, edit and face edit simpliciality");
  add_input(legacy, cfg, true);
  add_common(legacy, cfg);

  auto* gen = app.add_subcommand("generate", "Sample simplicial Chung-Lu graphs");
  add_input(gen, cfg, false);
  add_common(gen, cfg);
  gen->add_option("--spec", cfg.spec, "Generation spec JSON")->envname("HYPERSIMP_SPEC");
  gen->add_option("--q", cfg.q, "q values (one graph each)")->envname("HYPERSIMP_Q")->delimiter(',');
  gen->add_flag("--connected", cfg.connected, "Build a connected skeleton first")->envname("HYPERSIMP_CONNECTED");

  auto* exp = app.add_subcommand("experiment", "Growth and diffusion on a graph and its random models");
  add_input(exp, cfg, true);
  add_common(exp, cfg);
  exp->add_option("--which", cfg.which, "random-growth, adversarial-growth, diffusion-single or diffusion-fraction")
      ->envname("HYPERSIMP_WHICH")
      ->required();
  exp->add_option("--reps", cfg.reps, "Replicates per series (default 10000, 20 for adversarial growth)")
      ->envname("HYPERSIMP_REPS")
      ->check(CLI::PositiveNumber);
  exp->add_option("--q", cfg.q, "q values of the model series")->envname("HYPERSIMP_Q")->delimiter(',');
  exp->add_option("--rounds", cfg.rounds, "Diffusion rounds")
      ->envname("HYPERSIMP_ROUNDS")
      ->check(CLI::PositiveNumber);
  exp->add_option("--line-graph-cap", cfg.line_graph_cap, "Largest edge count for betweenness")
      ->envname("HYPERSIMP_LINE_GRAPH_CAP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (cfg.min_size > cfg.max_size) {
    err << "error: --min-size exceeds --max-size\n";
    return 2;
  }
  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (legacy->parsed()) return cmd_legacy(cfg, out);
    if (gen->parsed()) return cmd_generate(cfg, *gen, out);
    return cmd_experiment(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << cfg.input << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace hypersimp
