#include "commevo/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "commevo/errors.hpp"
#include "commevo/kernels.hpp"

namespace commevo {

void EvolutionConfig::validate() const {
  if (population < 4 || population % 2 != 0)
    throw ConfigError("population size must be even and at least 4");
  if (generations < 1) throw ConfigError("generation count must be at least 1");
  if (workers < 1) throw ConfigError("worker count must be at least 1");
  operators.validate();
  if (operators.parents > population)
    throw ConfigError("parent count exceeds population size");
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

double best_quality(const Population& pop) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& m : pop.members()) best = std::max(best, scalarized_quality(m.objectives));
  return best;
}

}  // namespace

EvolutionResult evolve(const Graph& g, const EvolutionConfig& cfg) {
  cfg.validate();
  if (g.edge_count() == 0) throw EmptyGraphError();

  EvolutionResult result;
  auto& timing = result.timings;
  const auto run_start = Clock::now();

  auto t = Clock::now();
  auto initial = initialize_population(g, cfg.population, cfg.seed, cfg.workers);
  timing.initialize_ms = elapsed_ms(t);

  t = Clock::now();
  auto initial_objectives = evaluate_population(g, initial, cfg.workers);
  timing.evaluate_ms += elapsed_ms(t);

  Population pop;
  pop.reserve(2 * cfg.population);
  for (std::size_t i = 0; i < initial.size(); ++i)
    pop.add(std::move(initial[i]), initial_objectives[i]);

  std::vector<Partition> pool;
  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    const auto gen_start = Clock::now();

    t = Clock::now();
    pop.rank();
    timing.rank_ms += elapsed_ms(t);

    t = Clock::now();
    RngStream tournament_rng(cfg.seed, StreamPurpose::tournament, gen);
    const auto winners = tournament_select(pop, cfg.population, tournament_rng);
    pool.clear();
    pool.reserve(winners.size());
    for (std::size_t idx : winners) pool.push_back(pop[idx].partition);
    timing.tournament_ms += elapsed_ms(t);

    t = Clock::now();
    auto children = create_offspring(pool, g, cfg.operators, cfg.seed, gen, cfg.workers);
    timing.offspring_ms += elapsed_ms(t);

    t = Clock::now();
    auto child_objectives = evaluate_population(g, children, cfg.workers);
    timing.evaluate_ms += elapsed_ms(t);

    t = Clock::now();
    for (std::size_t i = 0; i < children.size(); ++i)
      pop.add(std::move(children[i]), child_objectives[i]);
    pop = environmental_selection(std::move(pop), cfg.population);
    std::size_t first_front = 0;
    for (const auto& m : pop.members()) first_front += m.rank == 1 ? 1 : 0;
    timing.survival_ms += elapsed_ms(t);

    result.history.push_back({best_quality(pop), first_front});
    timing.generation_ms.push_back(elapsed_ms(gen_start));
  }

  pop.rank();
  std::set<std::vector<Label>> seen;
  for (const auto& m : pop.members()) {
    if (m.rank != 1) continue;
    auto canonical = canonicalize(m.partition);
    if (!seen.insert(std::vector<Label>(canonical.labels().begin(), canonical.labels().end()))
             .second)
      continue;
    result.front.push_back(m);
  }
  std::stable_sort(result.front.begin(), result.front.end(),
                   [](const Individual& a, const Individual& b) {
                     if (a.objectives.intra != b.objectives.intra)
                       return a.objectives.intra < b.objectives.intra;
                     return a.objectives.inter < b.objectives.inter;
                   });
  timing.total_ms = elapsed_ms(run_start);
  return result;
}

const Individual& select_best(std::span<const Individual> front) {
  if (front.empty()) throw ContractError("select_best on an empty front");
  std::size_t best = 0;
  double best_q = scalarized_quality(front[0].objectives);
  std::size_t best_k = front[0].partition.community_count();
  for (std::size_t i = 1; i < front.size(); ++i) {
    const double q = scalarized_quality(front[i].objectives);
    if (q < best_q) continue;
    const std::size_t k = front[i].partition.community_count();
    if (q > best_q || k < best_k) {
      best = i;
      best_q = q;
      best_k = k;
    }
  }
  return front[best];
}

}  // namespace commevo
