#pragma once

// Population-level kernels. The default versions parallelize across
// individuals with OpenMP; the `serial` namespace holds the single-threaded
// reference used by the tests and benchmarks. Both produce identical output
// for identical inputs because every individual draws from its own RngStream.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commevo/graph.hpp"
#include "commevo/objectives.hpp"
#include "commevo/operators.hpp"
#include "commevo/partition.hpp"

namespace commevo {

// Throws ConfigError for count < 2.
std::vector<Partition> initialize_population(const Graph& g, std::size_t count,
                                             std::uint64_t seed, int workers);

std::vector<ObjectiveVector> evaluate_population(const Graph& g,
                                                 std::span<const Partition> population,
                                                 int workers);

// One child per pool member; child i draws from the stream
// (seed, offspring, generation, i).
std::vector<Partition> create_offspring(std::span<const Partition> pool, const Graph& g,
                                        const OperatorParams& params, std::uint64_t seed,
                                        std::uint64_t generation, int workers);

namespace serial {

std::vector<Partition> initialize_population(const Graph& g, std::size_t count,
                                             std::uint64_t seed);

std::vector<ObjectiveVector> evaluate_population(const Graph& g,
                                                 std::span<const Partition> population);

std::vector<Partition> create_offspring(std::span<const Partition> pool, const Graph& g,
                                        const OperatorParams& params, std::uint64_t seed,
                                        std::uint64_t generation);

}  // namespace serial

}  // namespace commevo
