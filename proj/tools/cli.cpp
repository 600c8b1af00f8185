#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commevo/engine.hpp"
#include "commevo/errors.hpp"
#include "commevo/experiment.hpp"
#include "commevo/io.hpp"
#include "commevo/metrics.hpp"
#include "commevo/oracle.hpp"
#include "commevo/planted.hpp"

namespace commevo {
namespace {

struct Options {
  EvolutionConfig config;
  BenchmarkSpec spec;
  std::string input_format = "whitespace";
  std::string format = "json";
  std::string output;

  std::string graph_path;
  std::string partition_path;
  std::string truth_path;

  std::vector<std::size_t> bench_n{1000};
  std::vector<double> bench_mu{0.1, 0.3, 0.5, 0.7};
  std::size_t seeds = 5;
  std::vector<int> threads;
  std::size_t repeats = 1;
  std::size_t max_nodes = default_oracle_limit;
};

int default_workers() {
  if (const char* env = std::getenv("COMMEVO_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("COMMEVO_WORKERS must be a positive integer, got '") + env +
                      "'");
  }
  return 1;
}

void add_engine_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--population", o.config.population, "population size (even, >= 4)");
  cmd.add_option("--generations", o.config.generations, "number of generations");
  cmd.add_option("--crossover", o.config.operators.crossover_rate, "crossover probability");
  cmd.add_option("--mutation", o.config.operators.mutation_rate, "per-node mutation probability");
  cmd.add_option("--parents", o.config.operators.parents, "parents per crossover");
  cmd.add_option("--seed", o.config.seed, "random seed");
  cmd.add_option("--workers", o.config.workers, "worker threads (default: $COMMEVO_WORKERS or 1)");
}

void add_spec_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--n", o.spec.n, "number of nodes");
  cmd.add_option("--mu", o.spec.mu, "mixing parameter");
  cmd.add_option("--avg-degree", o.spec.avg_degree, "average degree");
  cmd.add_option("--min-community", o.spec.min_community, "smallest community");
  cmd.add_option("--max-community", o.spec.max_community, "largest community");
  cmd.add_option("--graph-seed", o.spec.seed, "generator seed");
}

void add_format_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--output", o.output, "output path or prefix");
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

LoadedGraph load_graph(const Options& o) {
  auto in = open_in(o.graph_path);
  return load_edge_list(in, o.input_format == "csv" ? EdgeListFormat::csv
                                                    : EdgeListFormat::whitespace);
}

// Writes `text` to `path`, or to `out` when no path is given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  auto file = open_out(path);
  file << text;
  if (!file) throw IoError("cannot write '" + path + "'");
}

json spec_json(const BenchmarkSpec& s) {
  return {{"n", s.n},
          {"mu", s.mu},
          {"avg_degree", s.avg_degree},
          {"min_community", s.min_community},
          {"max_community", s.max_community},
          {"seed", s.seed}};
}

int cmd_detect(const Options& o, std::ostream& out, std::ostream& err) {
  o.config.validate();
  const auto g = load_graph(o);
  const auto result = evolve(g.graph, o.config);
  const auto report = run_report_json(o.config, g.graph, g.report, g.labels, result);
  const auto& best = select_best(result.front);

  std::ostringstream best_csv;
  write_partition_csv(best_csv, canonicalize(best.partition), g.labels);

  if (!o.output.empty()) {
    emit(o.output + ".json", report.dump(2) + "\n", out);
    emit(o.output + ".best.csv", best_csv.str(), out);
    out << config_json(o.config).dump() << "\n";
  } else if (o.format == "csv") {
    err << "config " << config_json(o.config).dump() << "\n";
    out << best_csv.str();
  } else {
    out << report.dump(2) << "\n";
  }
  return exit_ok;
}

Partition read_partition_file(const std::string& path, const NodeLabelTable& labels) {
  auto in = open_in(path);
  return read_partition_csv(in, labels);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto p = read_partition_file(o.partition_path, g.labels);
  const auto truth = read_partition_file(o.truth_path, g.labels);
  const double n = nmi(p, truth);
  const double a = ami(p, truth);
  const double h = harmonic_quality(a, n);
  const double q = modularity(g.graph, p);
  std::ostringstream text;
  if (o.format == "csv") {
    text << std::setprecision(17) << "nmi,ami,H,modularity\n"
         << n << ',' << a << ',' << h << ',' << q << '\n';
  } else {
    text << json{{"nmi", n}, {"ami", a}, {"H", h}, {"modularity", q}}.dump(2) << "\n";
  }
  emit(o.output, text.str(), out);
  return exit_ok;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.output.empty()) throw ConfigError("generate needs --output PREFIX");
  const auto bench = generate_planted(o.spec);
  const auto labels = NodeLabelTable::identity(bench.graph.node_count());

  std::ostringstream edges, truth;
  write_edge_list(edges, bench.graph, labels);
  write_partition_csv(truth, bench.truth, labels);
  json echo = spec_json(o.spec);
  echo["edges"] = bench.graph.edge_count();
  echo["realized_mu"] = bench.realized_mu;
  echo["dropped_edges"] = bench.dropped_edges;
  echo["communities"] = bench.truth.community_count();

  emit(o.output + ".edges", edges.str(), out);
  emit(o.output + ".truth.csv", truth.str(), out);
  emit(o.output + ".spec.json", echo.dump(2) + "\n", out);
  out << echo.dump() << "\n";
  return exit_ok;
}

// One plot series per metric: rows of (n, mu, E, mean, low, high).
std::string panel_csv(const ExperimentReport& report, Interval CellSummary::*metric) {
  std::ostringstream s;
  s << std::setprecision(10) << "n,mu,E,mean,low,high\n";
  for (const auto& c : report.cells) {
    const Interval& iv = c.*metric;
    s << c.n << ',' << c.mu << ',' << c.effort << ',' << iv.mean << ',' << iv.low << ','
      << iv.high << '\n';
  }
  return s.str();
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  o.config.validate();
  if (!o.threads.empty()) {
    std::vector<int> counts = o.threads;
    const auto rows = thread_scaling(o.spec, o.config, counts, o.repeats);
    std::ostringstream s;
    s << std::setprecision(10) << "workers,wall_ms,speedup,identical_front\n";
    for (const auto& r : rows)
      s << r.workers << ',' << r.wall_ms << ',' << r.speedup << ','
        << (r.identical_front ? 1 : 0) << '\n';
    emit(o.output.empty() ? "" : o.output + ".threads.csv", s.str(), out);
    err << "config " << config_json(o.config).dump() << " spec " << spec_json(o.spec).dump()
        << "\n";
    return exit_ok;
  }

  std::vector<ExperimentCell> grid;
  for (std::size_t n : o.bench_n) {
    for (double mu : o.bench_mu) {
      ExperimentCell cell{o.spec, o.config};
      cell.spec.n = n;
      cell.spec.mu = mu;
      cell.spec.validate();
      grid.push_back(cell);
    }
  }
  const auto report = run_experiment(grid, o.seeds);
  for (const auto& r : report.runs)
    if (!r.ok()) err << "run failed (n=" << r.n << ", mu=" << r.mu << "): " << r.error << "\n";

  json doc = experiment_json(report);
  doc["config"] = config_json(o.config);
  doc["spec"] = spec_json(o.spec);
  doc["seeds"] = o.seeds;

  std::ostringstream runs, summary;
  write_runs_csv(runs, report.runs);
  write_summary_csv(summary, report.cells);

  if (o.output.empty()) {
    if (o.format == "csv") {
      err << "config " << doc["config"].dump() << "\n";
      out << summary.str();
    } else {
      out << doc.dump(2) << "\n";
    }
    return exit_ok;
  }
  emit(o.output + ".json", doc.dump(2) + "\n", out);
  emit(o.output + ".runs.csv", runs.str(), out);
  emit(o.output + ".summary.csv", summary.str(), out);
  emit(o.output + ".nmi.csv", panel_csv(report, &CellSummary::nmi), out);
  emit(o.output + ".ami.csv", panel_csv(report, &CellSummary::ami), out);
  emit(o.output + ".H.csv", panel_csv(report, &CellSummary::harmonic), out);
  emit(o.output + ".wall_ms.csv", panel_csv(report, &CellSummary::wall_ms), out);
  out << doc["config"].dump() << "\n";
  return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto front = exact_pareto(g.graph, o.max_nodes);
  auto doc = exact_front_json(g.graph, front);
  doc["max_nodes"] = o.max_nodes;
  emit(o.output, doc.dump(2) + "\n", out);
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multi-objective evolutionary community detection"};
  app.require_subcommand(1);

  try {
    o.config.workers = default_workers();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }

  auto* detect = app.add_subcommand("detect", "evolve a Pareto front for a graph");
  detect->add_option("graph", o.graph_path, "edge list")->required();
  detect->add_option("--input-format", o.input_format)
      ->check(CLI::IsMember({"whitespace", "csv"}));
  add_engine_flags(*detect, o);
  add_format_flags(*detect, o);

  auto* eval = app.add_subcommand("eval", "score a partition against a ground truth");
  eval->add_option("partition", o.partition_path, "partition CSV (node,community)")->required();
  eval->add_option("truth", o.truth_path, "ground truth CSV (node,community)")->required();
  eval->add_option("graph", o.graph_path, "edge list")->required();
  eval->add_option("--input-format", o.input_format)
      ->check(CLI::IsMember({"whitespace", "csv"}));
  add_format_flags(*eval, o);

  auto* generate = app.add_subcommand("generate", "write a planted-partition benchmark graph");
  add_spec_flags(*generate, o);
  generate->add_option("--output", o.output, "output prefix")->required();

  auto* bench = app.add_subcommand("bench", "run the benchmark grid or a thread-scaling sweep");
  add_engine_flags(*bench, o);
  add_spec_flags(*bench, o);
  bench->add_option("--n-grid", o.bench_n, "node counts");
  bench->add_option("--mu-grid", o.bench_mu, "mixing values");
  bench->add_option("--seeds", o.seeds, "runs per cell");
  bench->add_option("--threads", o.threads, "worker counts for a thread-scaling sweep");
  bench->add_option("--repeats", o.repeats, "repeats per worker count");
  add_format_flags(*bench, o);

  auto* oracle = app.add_subcommand("oracle", "enumerate the exact Pareto front of a tiny graph");
  oracle->add_option("graph", o.graph_path, "edge list")->required();
  oracle->add_option("--input-format", o.input_format)
      ->check(CLI::IsMember({"whitespace", "csv"}));
  oracle->add_option("--max-nodes", o.max_nodes, "enumeration limit");
  oracle->add_option("--output", o.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (*detect) return cmd_detect(o, out, err);
    if (*eval) return cmd_eval(o, out);
    if (*generate) return cmd_generate(o, out);
    if (*bench) return cmd_bench(o, out, err);
    return cmd_oracle(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const EmptyGraphError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
}

}  // namespace commevo
