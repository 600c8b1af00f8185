#include <doctest.h>

#include "commevo/errors.hpp"
#include "commevo/kernels.hpp"
#include "commevo/planted.hpp"
#include "fixtures.hpp"

using namespace commevo;

TEST_CASE("parallel kernels match the serial reference") {
  BenchmarkSpec spec;
  spec.n = 500;
  spec.mu = 0.3;
  spec.seed = 5;
  auto g = generate_planted(spec).graph;
  const OperatorParams params{};

  for (int workers : {1, 2, 3, 8}) {
    CAPTURE(workers);
    auto serial_pop = serial::initialize_population(g, 40, 7);
    auto parallel_pop = initialize_population(g, 40, 7, workers);
    CHECK(serial_pop == parallel_pop);

    CHECK(serial::evaluate_population(g, serial_pop) ==
          evaluate_population(g, parallel_pop, workers));

    CHECK(serial::create_offspring(serial_pop, g, params, 7, 4) ==
          create_offspring(parallel_pop, g, params, 7, 4, workers));
  }
}

TEST_CASE("kernel errors surface on the calling thread") {
  auto g = testing::triangle();
  std::vector<Partition> bad{Partition({0, 1, 2}), Partition({0, 1})};
  CHECK_THROWS_AS(evaluate_population(g, bad, 4), ContractError);
  CHECK_THROWS_AS(initialize_population(g, 1, 1, 4), ConfigError);
  std::vector<Partition> small(2, Partition({0, 1, 2}));
  CHECK_THROWS_AS(create_offspring(small, g, OperatorParams{}, 1, 0, 2), ConfigError);
}
