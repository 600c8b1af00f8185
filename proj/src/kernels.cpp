#include "commevo/kernels.hpp"

#include <exception>

#include <omp.h>

#include "commevo/errors.hpp"

namespace commevo {

namespace {

void check_population_size(std::size_t count) {
  if (count < 2) throw ConfigError("population size must be at least 2");
}

// Runs body(i) for i in [0, count) on `workers` threads and rethrows the
// first exception on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for num_threads(workers < 1 ? 1 : workers) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(commevo_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<Partition> initialize_population(const Graph& g, std::size_t count,
                                             std::uint64_t seed, int workers) {
  check_population_size(count);
  std::vector<Partition> out(count);
  parallel_for(count, workers, [&](std::size_t i) {
    RngStream rng(seed, StreamPurpose::initialization, 0, i);
    out[i] = initial_partition(g, rng);
  });
  return out;
}

std::vector<ObjectiveVector> evaluate_population(const Graph& g,
                                                 std::span<const Partition> population,
                                                 int workers) {
  std::vector<ObjectiveVector> out(population.size());
  parallel_for(population.size(), workers,
               [&](std::size_t i) { out[i] = evaluate_objectives(g, population[i]); });
  return out;
}

std::vector<Partition> create_offspring(std::span<const Partition> pool, const Graph& g,
                                        const OperatorParams& params, std::uint64_t seed,
                                        std::uint64_t generation, int workers) {
  params.validate();
  if (pool.size() < params.parents)
    throw ConfigError("mating pool is smaller than the parent count");
  std::vector<Partition> out(pool.size());
  parallel_for(pool.size(), workers, [&](std::size_t i) {
    RngStream rng(seed, StreamPurpose::offspring, generation, i);
    out[i] = make_child(pool, g, params, rng).child;
  });
  return out;
}

namespace serial {

std::vector<Partition> initialize_population(const Graph& g, std::size_t count,
                                             std::uint64_t seed) {
  check_population_size(count);
  std::vector<Partition> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RngStream rng(seed, StreamPurpose::initialization, 0, i);
    out.push_back(initial_partition(g, rng));
  }
  return out;
}

std::vector<ObjectiveVector> evaluate_population(const Graph& g,
                                                 std::span<const Partition> population) {
  std::vector<ObjectiveVector> out;
  out.reserve(population.size());
  for (const auto& p : population) out.push_back(evaluate_objectives(g, p));
  return out;
}

std::vector<Partition> create_offspring(std::span<const Partition> pool, const Graph& g,
                                        const OperatorParams& params, std::uint64_t seed,
                                        std::uint64_t generation) {
  params.validate();
  if (pool.size() < params.parents)
    throw ConfigError("mating pool is smaller than the parent count");
  std::vector<Partition> out;
  out.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    RngStream rng(seed, StreamPurpose::offspring, generation, i);
    out.push_back(make_child(pool, g, params, rng).child);
  }
  return out;
}

}  // namespace serial

}  // namespace commevo
