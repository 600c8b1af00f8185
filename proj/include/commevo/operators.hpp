#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "commevo/graph.hpp"
#include "commevo/partition.hpp"
#include "commevo/rng.hpp"

namespace commevo {

struct OperatorParams {
  double crossover_rate = 0.8;  // chance a child is a crossover product
  double mutation_rate = 0.2;   // per-node chance of neighbor reassignment
  std::size_t parents = 4;      // parents voting in one crossover

  // Throws ConfigError when out of range.
  void validate() const;
};

// Singleton labels, then each node with neighbors adopts a uniformly random
// neighbor's id with probability 1/2. Isolated nodes keep their own id.
Partition initial_partition(const Graph& g, RngStream& rng);

// Per-node majority vote over the parents; ties are broken uniformly.
// Throws ContractError on fewer than two parents or mismatched sizes.
Partition crossover(std::span<const Partition* const> parents, RngStream& rng);

// Each node is selected with probability `rate`; selected nodes take the most
// frequent label among their neighbors in the input partition (ties uniform).
// All reads come from the unmodified input.
Partition mutate(const Partition& p, const Graph& g, double rate, RngStream& rng);

struct ChildOutcome {
  Partition child;
  bool crossed = false;
};

// One pass of the offspring loop body: crossover of `parents` distinct pool
// members with probability crossover_rate, otherwise a copy of one random
// member; the result is always mutated.
ChildOutcome make_child(std::span<const Partition> pool, const Graph& g,
                        const OperatorParams& params, RngStream& rng);

}  // namespace commevo
