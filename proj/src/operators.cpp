#include "commevo/operators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "commevo/errors.hpp"

namespace commevo {

void OperatorParams::validate() const {
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
    throw ConfigError("crossover probability must lie in [0, 1]");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
    throw ConfigError("mutation probability must lie in [0, 1]");
  if (parents < 2) throw ConfigError("crossover needs at least two parents");
}

namespace {

// Most frequent value in `votes`; ties resolved by a uniform draw over the
// tied values taken in ascending order. May reorder `votes`.
Label majority(std::vector<Label>& votes, RngStream& rng) {
  const std::size_t k = votes.size();
  if (std::all_of(votes.begin() + 1, votes.end(), [&](Label l) { return l == votes.front(); }))
    return votes.front();

  std::size_t best = 0;
  std::size_t tied = 0;
  Label winner = votes.front();

  if (k <= 8) {
    std::array<Label, 8> top{};
    for (std::size_t i = 0; i < k; ++i) {
      bool seen = false;
      for (std::size_t j = 0; j < i && !seen; ++j) seen = votes[j] == votes[i];
      if (seen) continue;
      std::size_t run = 1;
      for (std::size_t j = i + 1; j < k; ++j) run += votes[j] == votes[i] ? 1 : 0;
      if (run > best) {
        best = run;
        tied = 0;
      }
      if (run == best) top[tied++] = votes[i];
    }
    if (tied == 1) return top[0];
    std::sort(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(tied));
    return top[rng.below(tied)];
  }

  std::sort(votes.begin(), votes.end());
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && votes[j] == votes[i]) ++j;
    const std::size_t run = j - i;
    if (run > best) {
      best = run;
      tied = 1;
      winner = votes[i];
    } else if (run == best) {
      ++tied;
    }
    i = j;
  }
  if (tied == 1) return winner;
  std::size_t pick = rng.below(tied);
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && votes[j] == votes[i]) ++j;
    if (j - i == best && pick-- == 0) return votes[i];
    i = j;
  }
  return winner;
}

}  // namespace

Partition initial_partition(const Graph& g, RngStream& rng) {
  auto p = Partition::singletons(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    if (rng.uniform() < 0.5) p[v] = nbrs[rng.below(nbrs.size())];
  }
  return p;
}

Partition crossover(std::span<const Partition* const> parents, RngStream& rng) {
  if (parents.size() < 2) throw ContractError("crossover needs at least two parents");
  const std::size_t n = parents.front()->size();
  for (const Partition* parent : parents)
    if (parent->size() != n) throw ContractError("parent partitions differ in length");

  std::vector<Label> child(n);
  std::vector<Label> votes(parents.size());
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < parents.size(); ++i) votes[i] = (*parents[i])[v];
    child[v] = majority(votes, rng);
  }
  return Partition(std::move(child));
}

Partition mutate(const Partition& p, const Graph& g, double rate, RngStream& rng) {
  if (p.size() != g.node_count())
    throw ContractError("partition size does not match node count");
  Partition out = p;
  if (rate <= 0.0) return out;
  std::vector<Label> votes;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!(rng.uniform() < rate)) continue;
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    votes.clear();
    for (NodeId u : nbrs) votes.push_back(p[u]);
    out[v] = majority(votes, rng);
  }
  return out;
}

ChildOutcome make_child(std::span<const Partition> pool, const Graph& g,
                        const OperatorParams& params, RngStream& rng) {
  if (pool.size() < params.parents)
    throw ConfigError("mating pool of " + std::to_string(pool.size()) +
                      " is smaller than the parent count " +
                      std::to_string(params.parents));
  ChildOutcome out;
  if (rng.uniform() < params.crossover_rate) {
    std::vector<std::size_t> chosen;
    chosen.reserve(params.parents);
    while (chosen.size() < params.parents) {
      std::size_t idx = rng.below(pool.size());
      if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) chosen.push_back(idx);
    }
    std::vector<const Partition*> parents;
    parents.reserve(chosen.size());
    for (std::size_t idx : chosen) parents.push_back(&pool[idx]);
    out.child = crossover(parents, rng);
    out.crossed = true;
  } else {
    out.child = pool[rng.below(pool.size())];
  }
  out.child = mutate(out.child, g, params.mutation_rate, rng);
  return out;
}

}  // namespace commevo
