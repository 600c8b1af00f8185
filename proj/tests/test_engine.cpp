#include <doctest.h>

#include <cmath>

#include "commevo/engine.hpp"
#include "commevo/errors.hpp"
#include "commevo/io.hpp"
#include "commevo/planted.hpp"
#include "fixtures.hpp"

using namespace commevo;

namespace {

void check_mutually_nondominated(const std::vector<Individual>& front) {
  for (const auto& a : front)
    for (const auto& b : front) CHECK_FALSE(dominates(a.objectives, b.objectives));
}

Individual member(ObjectiveVector v, std::vector<Label> labels) {
  return Individual{Partition(std::move(labels)), v, 1, 0.0, 0};
}

}  // namespace

TEST_CASE("config validation") {
  EvolutionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.population = 5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.population = 2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.generations = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.population = 4;
  cfg.operators.parents = 6;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("toy network front contains the planted partition") {
  auto g = testing::toy_network();
  EvolutionConfig cfg;  // 100 x 100, 0.8 / 0.2 / 4
  cfg.seed = 7;
  auto result = evolve(g.graph, cfg);
  CHECK(result.history.size() == 100);
  REQUIRE_FALSE(result.front.empty());
  check_mutually_nondominated(result.front);

  const auto truth = canonicalize(testing::toy_truth(g));
  bool found = false;
  for (const auto& m : result.front) {
    if (canonicalize(m.partition) == truth) {
      found = true;
      CHECK(std::abs(m.objectives.intra - 1.0 / 7.0) < 1e-12);
      CHECK(std::abs(m.objectives.inter - 1.0 / 3.0) < 1e-12);
    }
  }
  CHECK(found);
  const auto& best = select_best(result.front);
  CHECK(canonicalize(best.partition) == truth);
  CHECK(std::abs(scalarized_quality(best.objectives) - 11.0 / 21.0) < 1e-9);
}

TEST_CASE("single generation on the triangle") {
  EvolutionConfig cfg;
  cfg.population = 4;
  cfg.generations = 1;
  auto result = evolve(testing::triangle(), cfg);
  CHECK(result.history.size() == 1);
  REQUIRE_FALSE(result.front.empty());
  check_mutually_nondominated(result.front);
}

TEST_CASE("front is deduplicated and carries evaluated objectives") {
  auto g = testing::two_cliques();
  EvolutionConfig cfg;
  cfg.population = 20;
  cfg.generations = 30;
  auto result = evolve(g, cfg);
  for (std::size_t i = 0; i < result.front.size(); ++i) {
    const auto v = evaluate_objectives(g, result.front[i].partition);
    CHECK(v == result.front[i].objectives);
    CHECK(result.front[i].rank == 1);
    for (std::size_t j = i + 1; j < result.front.size(); ++j)
      CHECK(canonicalize(result.front[i].partition) != canonicalize(result.front[j].partition));
  }
}

TEST_CASE("results do not depend on the worker count") {
  BenchmarkSpec spec;
  spec.n = 300;
  spec.mu = 0.3;
  spec.seed = 2;
  auto g = generate_planted(spec).graph;
  EvolutionConfig cfg;
  cfg.population = 20;
  cfg.generations = 15;
  cfg.seed = 99;
  cfg.workers = 1;
  auto one = evolve(g, cfg);
  cfg.workers = 8;
  auto eight = evolve(g, cfg);
  CHECK(front_json(one.front).dump() == front_json(eight.front).dump());
  REQUIRE(one.history.size() == eight.history.size());
  for (std::size_t i = 0; i < one.history.size(); ++i)
    CHECK(one.history[i].best_quality == eight.history[i].best_quality);
}

TEST_CASE("best quality never drops while front one fits") {
  BenchmarkSpec spec;
  spec.n = 400;
  spec.mu = 0.4;
  spec.seed = 8;
  auto g = generate_planted(spec).graph;
  EvolutionConfig cfg;
  cfg.population = 40;
  cfg.generations = 40;
  auto result = evolve(g, cfg);
  for (std::size_t gen = 1; gen < result.history.size(); ++gen) {
    if (result.history[gen].first_front > cfg.population) continue;
    CHECK(result.history[gen].best_quality >= result.history[gen - 1].best_quality);
  }
}

TEST_CASE("evolve rejects bad inputs") {
  const std::vector<Edge> none;
  CHECK_THROWS_AS(evolve(Graph::from_edges(4, none), EvolutionConfig{}), EmptyGraphError);
  EvolutionConfig cfg;
  cfg.generations = 0;
  CHECK_THROWS_AS(evolve(testing::triangle(), cfg), ConfigError);
}

TEST_CASE("select_best") {
  std::vector<Individual> front{member({0.0, 1.0}, {0, 0, 0}),
                                member({1.0 / 7.0, 1.0 / 3.0}, {0, 0, 1}),
                                member({1.0, 0.05}, {0, 1, 2})};
  CHECK(&select_best(front) == &front[1]);

  std::vector<Individual> single{member({0.3, 0.3}, {0, 1})};
  CHECK(&select_best(single) == &single[0]);

  // Equal quality: fewer communities wins.
  std::vector<Individual> tie{member({0.25, 0.5}, {0, 1, 2, 3, 4}),
                              member({0.5, 0.25}, {0, 1, 2, 0, 1})};
  CHECK(&select_best(tie) == &tie[1]);

  CHECK_THROWS_AS(select_best(std::vector<Individual>{}), ContractError);
}
