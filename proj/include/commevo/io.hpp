#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "commevo/engine.hpp"
#include "commevo/experiment.hpp"
#include "commevo/graph.hpp"
#include "commevo/oracle.hpp"
#include "commevo/partition.hpp"

namespace commevo {

using json = nlohmann::json;

// {nodes, edges, dropped_self_loops, dropped_duplicates}
json graph_report_json(const Graph& g, const LoadReport& report);

// {"labels": [...]}
json partition_json(const Partition& p);

// Reads {"labels": [...]} and checks the length against node_count.
// Throws ParseError on malformed JSON and ContractError on a length mismatch.
Partition read_partition_json(std::istream& in, std::size_t node_count);

// Two columns: external node id, community. No header.
void write_partition_csv(std::ostream& out, const Partition& p, const NodeLabelTable& labels);

// Community names are interned in order of first appearance. Every node of
// `labels` must appear exactly once, otherwise ContractError.
Partition read_partition_csv(std::istream& in, const NodeLabelTable& labels);

json config_json(const EvolutionConfig& cfg);

// [{f1, f2, Q, k, labels}] in front order.
json front_json(std::span<const Individual> front);

// Deterministic part of a detect run: config, graph report, per-generation
// best quality, front, best member. Timing lives under "timing".
json run_report_json(const EvolutionConfig& cfg, const Graph& g, const LoadReport& load,
                     const NodeLabelTable& labels, const EvolutionResult& result);

json exact_front_json(const Graph& g, std::span<const ExactFrontPoint> front);

// Per-run table, one row per RunRecord.
void write_runs_csv(std::ostream& out, std::span<const RunRecord> runs);

// Per-cell table with means, 95% intervals and effort.
void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells);

json experiment_json(const ExperimentReport& report);

}  // namespace commevo
