#pragma once

#include <cstddef>
#include <cstdint>

#include "commevo/graph.hpp"
#include "commevo/partition.hpp"

namespace commevo {

// Planted-partition benchmark with LFR-style mixing semantics: mu is the
// expected fraction of a node's edges that leave its community.
struct BenchmarkSpec {
  std::size_t n = 1000;
  double mu = 0.1;
  double avg_degree = 20.0;
  std::size_t min_community = 20;
  std::size_t max_community = 100;
  std::uint64_t seed = 1;

  // Throws ConfigError on out-of-range or infeasible parameters.
  void validate() const;
};

struct GroundTruthGraph {
  Graph graph;
  Partition truth;
  double realized_mu = 0.0;  // inter-community edges / m
  std::size_t dropped_edges = 0;  // stubs abandoned after repeated collisions
};

// Community sizes are drawn uniformly from [min, max] until they cover n; the
// last one is trimmed and, if that leaves it below min, topped up from the
// others. Nodes are shuffled into communities. Each community receives
// round(|c| * (1 - mu) * avg_degree / 2) edges between uniform member pairs,
// and round(n * mu * avg_degree / 2) edges join uniform node pairs from
// different communities. Colliding pairs are redrawn up to 100 times.
GroundTruthGraph generate_planted(const BenchmarkSpec& spec);

}  // namespace commevo
