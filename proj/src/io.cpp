#include "commevo/io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "commevo/errors.hpp"
#include "commevo/metrics.hpp"

namespace commevo {

json graph_report_json(const Graph& g, const LoadReport& report) {
  return {{"nodes", g.node_count()},
          {"edges", g.edge_count()},
          {"dropped_self_loops", report.dropped_self_loops},
          {"dropped_duplicates", report.dropped_duplicates}};
}

json partition_json(const Partition& p) {
  return {{"labels", std::vector<Label>(p.labels().begin(), p.labels().end())}};
}

Partition read_partition_json(std::istream& in, std::size_t node_count) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array())
    throw ParseError(1, "expected an object with a \"labels\" array");
  std::vector<Label> labels;
  for (const auto& x : doc["labels"]) {
    if (!x.is_number_unsigned()) throw ParseError(1, "labels must be non-negative integers");
    labels.push_back(x.get<Label>());
  }
  if (labels.size() != node_count)
    throw ContractError("partition has " + std::to_string(labels.size()) + " labels, graph has " +
                        std::to_string(node_count) + " nodes");
  return Partition(std::move(labels));
}

void write_partition_csv(std::ostream& out, const Partition& p, const NodeLabelTable& labels) {
  if (labels.size() != p.size()) throw ContractError("label table does not match partition");
  for (NodeId v = 0; v < p.size(); ++v) out << labels.name(v) << ',' << p[v] << '\n';
}

Partition read_partition_csv(std::istream& in, const NodeLabelTable& labels) {
  constexpr Label unset = std::numeric_limits<Label>::max();
  std::vector<Label> out(labels.size(), unset);
  std::unordered_map<std::string, Label> communities;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw ParseError(line_no, "expected two comma-separated columns");
    const std::string node = line.substr(0, comma);
    const std::string community = line.substr(comma + 1);
    const auto id = labels.find(node);
    if (!id) throw ContractError("node '" + node + "' is not in the graph");
    if (out[*id] != unset) throw ContractError("node '" + node + "' assigned twice");
    auto [it, inserted] =
        communities.try_emplace(community, static_cast<Label>(communities.size()));
    out[*id] = it->second;
  }
  for (NodeId v = 0; v < out.size(); ++v)
    if (out[v] == unset) throw ContractError("node '" + labels.name(v) + "' has no community");
  return Partition(std::move(out));
}

json config_json(const EvolutionConfig& cfg) {
  return {{"population", cfg.population},
          {"generations", cfg.generations},
          {"crossover", cfg.operators.crossover_rate},
          {"mutation", cfg.operators.mutation_rate},
          {"parents", cfg.operators.parents},
          {"seed", cfg.seed},
          {"workers", cfg.workers}};
}

json front_json(std::span<const Individual> front) {
  json out = json::array();
  for (const auto& m : front) {
    const auto canonical = canonicalize(m.partition);
    out.push_back({{"f1", m.objectives.intra},
                   {"f2", m.objectives.inter},
                   {"Q", scalarized_quality(m.objectives)},
                   {"k", m.partition.community_count()},
                   {"labels", std::vector<Label>(canonical.labels().begin(),
                                                 canonical.labels().end())}});
  }
  return out;
}

json run_report_json(const EvolutionConfig& cfg, const Graph& g, const LoadReport& load,
                     const NodeLabelTable& labels, const EvolutionResult& result) {
  json nodes = json::array();
  for (NodeId v = 0; v < labels.size(); ++v) nodes.push_back(labels.name(v));

  json best_q = json::array();
  for (const auto& s : result.history) best_q.push_back(s.best_quality);

  json front = front_json(result.front);
  // Labels are stored once per partition; entries point at them by index.
  json partitions = json::array();
  for (std::size_t i = 0; i < front.size(); ++i) {
    partitions.push_back({{"labels", front[i]["labels"]}});
    front[i].erase("labels");
    front[i]["labels_ref"] = i;
  }

  const auto& best = select_best(result.front);
  const auto best_index = static_cast<std::size_t>(&best - result.front.data());
  const auto& t = result.timings;

  return {{"config", config_json(cfg)},
          {"graph", graph_report_json(g, load)},
          {"nodes", nodes},
          {"generations", result.history.size()},
          {"best_q_per_generation", best_q},
          {"front", front},
          {"partitions", partitions},
          {"best", {{"labels_ref", best_index},
                    {"f1", best.objectives.intra},
                    {"f2", best.objectives.inter},
                    {"Q", scalarized_quality(best.objectives)},
                    {"modularity", modularity(g, best.partition)},
                    {"k", best.partition.community_count()}}},
          {"timing", {{"initialize_ms", t.initialize_ms},
                      {"evaluate_ms", t.evaluate_ms},
                      {"rank_ms", t.rank_ms},
                      {"tournament_ms", t.tournament_ms},
                      {"offspring_ms", t.offspring_ms},
                      {"survival_ms", t.survival_ms},
                      {"total_ms", t.total_ms}}}};
}

json exact_front_json(const Graph& g, std::span<const ExactFrontPoint> front) {
  json points = json::array();
  for (const auto& p : front)
    points.push_back({{"f1", p.objectives.intra},
                      {"f2", p.objectives.inter},
                      {"Q", scalarized_quality(p.objectives)},
                      {"k", p.witness.community_count()},
                      {"labels", std::vector<Label>(p.witness.labels().begin(),
                                                    p.witness.labels().end())}});
  return {{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"front", points}};
}

namespace {

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

}  // namespace

void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs) {
  out << "n,mu,Np,T,Cp,Mp,Es,seed,nmi,ami,H,Q,modularity,k_detected,k_truth,wall_ms,workers\n";
  for (const auto& r : runs) {
    if (!r.ok()) continue;
    out << r.n << ',' << fmt(r.mu) << ',' << r.population << ',' << r.generations << ','
        << fmt(r.crossover) << ',' << fmt(r.mutation) << ',' << r.parents << ',' << r.seed << ','
        << fmt(r.nmi) << ',' << fmt(r.ami) << ',' << fmt(r.harmonic) << ',' << fmt(r.quality)
        << ',' << fmt(r.modularity) << ',' << r.k_detected << ',' << r.k_truth << ','
        << fmt(r.wall_ms) << ',' << r.workers << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells) {
  out << "n,mu,Np,T,E,runs,failures,nmi_mean,nmi_low,nmi_high,ami_mean,ami_low,ami_high,"
         "H_mean,H_low,H_high,Q_mean,Q_low,Q_high,wall_ms_mean,wall_ms_low,wall_ms_high\n";
  for (const auto& c : cells) {
    out << c.n << ',' << fmt(c.mu) << ',' << c.population << ',' << c.generations << ','
        << c.effort << ',' << c.runs << ',' << c.failures;
    for (const Interval* iv : {&c.nmi, &c.ami, &c.harmonic, &c.quality, &c.wall_ms})
      out << ',' << fmt(iv->mean) << ',' << fmt(iv->low) << ',' << fmt(iv->high);
    out << '\n';
  }
}

json experiment_json(const ExperimentReport& report) {
  auto interval = [](const Interval& iv) {
    return json{{"mean", iv.mean}, {"low", iv.low}, {"high", iv.high}};
  };
  json cells = json::array();
  for (const auto& c : report.cells)
    cells.push_back({{"n", c.n},
                     {"mu", c.mu},
                     {"Np", c.population},
                     {"T", c.generations},
                     {"E", c.effort},
                     {"runs", c.runs},
                     {"failures", c.failures},
                     {"nmi", interval(c.nmi)},
                     {"ami", interval(c.ami)},
                     {"H", interval(c.harmonic)},
                     {"Q", interval(c.quality)},
                     {"wall_ms", interval(c.wall_ms)}});
  json runs = json::array();
  for (const auto& r : report.runs) {
    json row = {{"cell", r.cell},   {"n", r.n},       {"mu", r.mu},
                {"seed", r.seed},   {"workers", r.workers}};
    if (r.ok()) {
      row.update({{"nmi", r.nmi},
                  {"ami", r.ami},
                  {"H", r.harmonic},
                  {"Q", r.quality},
                  {"modularity", r.modularity},
                  {"k_detected", r.k_detected},
                  {"k_truth", r.k_truth},
                  {"realized_mu", r.realized_mu},
                  {"wall_ms", r.wall_ms}});
    } else {
      row["error"] = r.error;
    }
    runs.push_back(row);
  }
  return {{"cells", cells}, {"runs", runs}};
}

}  // namespace commevo
