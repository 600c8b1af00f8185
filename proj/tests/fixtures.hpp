#pragma once

#include <string>

#include "commevo/graph.hpp"
#include "commevo/partition.hpp"

namespace commevo::testing {

// Three 4-cliques {1..4}, {5..8}, {9..12} bridged by 4-5, 4-10 and 5-10
// (1-based external names).
extern const std::string toy_edge_list;

LoadedGraph toy_network();

// Ground truth of toy_network() in internal id order.
Partition toy_truth(const LoadedGraph& g);

Graph triangle();
Graph path2();
// Center 0, leaves 1..leaves.
Graph star(std::size_t leaves);
// Nodes 0..3 and 4..7 are cliques joined by edge 3-4.
Graph two_cliques();
// G(n, p) with a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
Partition random_partition(std::size_t n, std::size_t max_label, std::uint64_t seed);

}  // namespace commevo::testing
