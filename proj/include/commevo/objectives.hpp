#pragma once

#include "commevo/graph.hpp"
#include "commevo/partition.hpp"

namespace commevo {

// Both coordinates are minimized.
//   intra = 1 - (edges inside communities) / m
//   inter = sum over communities of (community degree / 2m)^2
struct ObjectiveVector {
  double intra = 0.0;
  double inter = 0.0;

  bool operator==(const ObjectiveVector&) const = default;
};

// O(m + n). Throws EmptyGraphError if m == 0 and ContractError if the
// partition does not cover exactly the graph's nodes.
ObjectiveVector evaluate_objectives(const Graph& g, const Partition& p);

// Newman modularity, summed per community as |E(c)|/m - (d(c)/2m)^2.
double modularity(const Graph& g, const Partition& p);

// 1 - intra - inter; higher is better. Equals modularity for crisp partitions.
inline double scalarized_quality(const ObjectiveVector& v) noexcept {
  return 1.0 - v.intra - v.inter;
}

}  // namespace commevo
