#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commevo/graph.hpp"
#include "commevo/nsga.hpp"
#include "commevo/operators.hpp"

namespace commevo {

struct EvolutionConfig {
  std::size_t population = 100;
  std::size_t generations = 100;
  OperatorParams operators;
  std::uint64_t seed = 1;
  int workers = 1;

  // Population even and >= 4, generations >= 1, workers >= 1.
  void validate() const;
};

struct GenerationStats {
  double best_quality = 0.0;       // max scalarized quality in the survivors
  std::size_t first_front = 0;     // size of front 1 of parents + offspring
};

struct PhaseTimings {
  double initialize_ms = 0.0;
  double evaluate_ms = 0.0;
  double rank_ms = 0.0;
  double tournament_ms = 0.0;
  double offspring_ms = 0.0;
  double survival_ms = 0.0;
  double total_ms = 0.0;
  std::vector<double> generation_ms;
};

struct EvolutionResult {
  // Rank-1 members of the final population, deduplicated by canonical
  // partition and ordered by (intra, inter).
  std::vector<Individual> front;
  std::vector<GenerationStats> history;
  PhaseTimings timings;
};

// Runs exactly cfg.generations NSGA-II generations. The output is a pure
// function of (g, cfg) and does not depend on cfg.workers.
EvolutionResult evolve(const Graph& g, const EvolutionConfig& cfg);

// Highest scalarized quality; ties go to fewer communities, then to the
// earlier member. Throws ContractError on an empty front.
const Individual& select_best(std::span<const Individual> front);

}  // namespace commevo
