#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commevo/engine.hpp"
#include "commevo/planted.hpp"

namespace commevo {

struct ExperimentCell {
  BenchmarkSpec spec;
  EvolutionConfig config;
};

// One evolve + select_best run scored against the planted truth. Run s of a
// cell uses graph seed spec.seed + s and engine seed config.seed + s; `seed`
// holds the engine seed.
struct RunRecord {
  std::size_t cell = 0;
  std::size_t n = 0;
  double mu = 0.0;
  std::size_t population = 0;
  std::size_t generations = 0;
  double crossover = 0.0;
  double mutation = 0.0;
  std::size_t parents = 0;
  std::uint64_t seed = 0;
  double nmi = 0.0;
  double ami = 0.0;
  double harmonic = 0.0;
  double quality = 0.0;
  double modularity = 0.0;
  std::size_t k_detected = 0;
  std::size_t k_truth = 0;
  double wall_ms = 0.0;
  int workers = 1;
  double realized_mu = 0.0;
  std::string error;  // empty on success

  bool ok() const noexcept { return error.empty(); }
};

// Mean with a two-sided 95% Student-t confidence interval.
struct Interval {
  double mean = 0.0;
  double low = 0.0;
  double high = 0.0;
};

Interval confidence_interval(std::span<const double> samples);

struct CellSummary {
  std::size_t cell = 0;
  std::size_t n = 0;
  double mu = 0.0;
  std::size_t population = 0;
  std::size_t generations = 0;
  std::size_t runs = 0;      // successful runs
  std::size_t failures = 0;
  std::uint64_t effort = 0;  // population * generations
  Interval nmi, ami, harmonic, quality, wall_ms;
};

struct ExperimentReport {
  std::vector<RunRecord> runs;
  std::vector<CellSummary> cells;
};

// Throws ConfigError for an empty grid or fewer than two seeds. Failures of
// individual runs are recorded in their RunRecord.
ExperimentReport run_experiment(std::span<const ExperimentCell> grid, std::size_t seeds);

RunRecord run_once(const ExperimentCell& cell, std::size_t seed_index);

struct ThreadScalingRow {
  int workers = 1;
  double wall_ms = 0.0;  // median over repeats
  double speedup = 1.0;  // relative to workers = 1
  bool identical_front = true;
};

// Runs the same (graph, config) with each worker count. worker_counts must
// contain 1.
std::vector<ThreadScalingRow> thread_scaling(const BenchmarkSpec& spec,
                                             const EvolutionConfig& cfg,
                                             std::span<const int> worker_counts,
                                             std::size_t repeats = 1);

// Candidate evaluations of a run: population size times generations.
constexpr std::uint64_t ga_effort(std::uint64_t population, std::uint64_t generations) noexcept {
  return population * generations;
}

}  // namespace commevo
