#include "commevo/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "commevo/errors.hpp"
#include "commevo/io.hpp"
#include "commevo/metrics.hpp"

namespace commevo {

Interval confidence_interval(std::span<const double> samples) {
  Interval out;
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double x : samples) sum += x;
  out.mean = sum / static_cast<double>(samples.size());
  out.low = out.high = out.mean;
  if (samples.size() < 2) return out;
  double ss = 0.0;
  for (double x : samples) ss += (x - out.mean) * (x - out.mean);
  const double df = static_cast<double>(samples.size() - 1);
  const double sd = std::sqrt(ss / df);
  const double t = boost::math::quantile(boost::math::students_t(df), 0.975);
  const double half = t * sd / std::sqrt(static_cast<double>(samples.size()));
  out.low = out.mean - half;
  out.high = out.mean + half;
  return out;
}

RunRecord run_once(const ExperimentCell& cell, std::size_t seed_index) {
  RunRecord r;
  r.n = cell.spec.n;
  r.mu = cell.spec.mu;
  r.population = cell.config.population;
  r.generations = cell.config.generations;
  r.crossover = cell.config.operators.crossover_rate;
  r.mutation = cell.config.operators.mutation_rate;
  r.parents = cell.config.operators.parents;
  r.seed = cell.config.seed + seed_index;
  r.workers = cell.config.workers;
  try {
    BenchmarkSpec spec = cell.spec;
    spec.seed = cell.spec.seed + seed_index;
    const auto bench = generate_planted(spec);
    r.realized_mu = bench.realized_mu;
    r.k_truth = bench.truth.community_count();

    EvolutionConfig cfg = cell.config;
    cfg.seed = r.seed;
    const auto start = std::chrono::steady_clock::now();
    const auto result = evolve(bench.graph, cfg);
    const auto& best = select_best(result.front);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();

    r.nmi = nmi(best.partition, bench.truth);
    r.ami = ami(best.partition, bench.truth);
    r.harmonic = harmonic_quality(r.ami, r.nmi);
    r.quality = scalarized_quality(best.objectives);
    r.modularity = modularity(bench.graph, best.partition);
    r.k_detected = best.partition.community_count();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

ExperimentReport run_experiment(std::span<const ExperimentCell> grid, std::size_t seeds) {
  if (grid.empty()) throw ConfigError("experiment grid is empty");
  if (seeds < 2) throw ConfigError("experiments need at least two seeds");

  ExperimentReport report;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    CellSummary summary;
    summary.cell = c;
    summary.n = grid[c].spec.n;
    summary.mu = grid[c].spec.mu;
    summary.population = grid[c].config.population;
    summary.generations = grid[c].config.generations;
    summary.effort = ga_effort(summary.population, summary.generations);

    std::vector<double> nmis, amis, hs, qs, times;
    for (std::size_t s = 0; s < seeds; ++s) {
      auto r = run_once(grid[c], s);
      r.cell = c;
      if (r.ok()) {
        nmis.push_back(r.nmi);
        amis.push_back(r.ami);
        hs.push_back(r.harmonic);
        qs.push_back(r.quality);
        times.push_back(r.wall_ms);
      } else {
        ++summary.failures;
      }
      report.runs.push_back(std::move(r));
    }
    summary.runs = nmis.size();
    summary.nmi = confidence_interval(nmis);
    summary.ami = confidence_interval(amis);
    summary.harmonic = confidence_interval(hs);
    summary.quality = confidence_interval(qs);
    summary.wall_ms = confidence_interval(times);
    report.cells.push_back(summary);
  }
  return report;
}

std::vector<ThreadScalingRow> thread_scaling(const BenchmarkSpec& spec,
                                             const EvolutionConfig& cfg,
                                             std::span<const int> worker_counts,
                                             std::size_t repeats) {
  if (std::find(worker_counts.begin(), worker_counts.end(), 1) == worker_counts.end())
    throw ConfigError("thread scaling needs a single-worker baseline");
  if (repeats < 1) repeats = 1;
  const auto bench = generate_planted(spec);

  struct Measured {
    int workers;
    double wall_ms;
    std::string front;
  };
  std::vector<Measured> measured;
  for (int w : worker_counts) {
    EvolutionConfig run_cfg = cfg;
    run_cfg.workers = w;
    std::vector<double> times;
    std::string front;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = evolve(bench.graph, run_cfg);
      times.push_back(
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count());
      front = front_json(result.front).dump();
    }
    std::sort(times.begin(), times.end());
    measured.push_back({w, times[times.size() / 2], std::move(front)});
  }

  const auto baseline =
      std::find_if(measured.begin(), measured.end(), [](const auto& m) { return m.workers == 1; });
  std::vector<ThreadScalingRow> rows;
  for (const auto& m : measured)
    rows.push_back({m.workers, m.wall_ms, baseline->wall_ms / m.wall_ms,
                    m.front == baseline->front});
  return rows;
}

}  // namespace commevo
