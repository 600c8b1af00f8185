#pragma once

#include <cstddef>
#include <vector>

#include "commevo/graph.hpp"
#include "commevo/objectives.hpp"
#include "commevo/partition.hpp"

namespace commevo {

struct ExactFrontPoint {
  ObjectiveVector objectives;
  Partition witness;  // first enumerated partition attaining the vector
};

inline constexpr std::size_t default_oracle_limit = 12;

// Enumerates every set partition of the node set (restricted growth strings)
// and returns the non-dominated objective vectors ordered by (intra, inter).
// Throws ConfigError if the graph has more than max_nodes nodes, since the
// count of set partitions grows as the Bell numbers (Bell(12) = 4,213,597).
std::vector<ExactFrontPoint> exact_pareto(const Graph& g,
                                          std::size_t max_nodes = default_oracle_limit);

}  // namespace commevo
