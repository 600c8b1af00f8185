#include "commevo/planted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "commevo/errors.hpp"
#include "commevo/rng.hpp"

namespace commevo {

void BenchmarkSpec::validate() const {
  if (n < 2) throw ConfigError("benchmark needs at least two nodes");
  if (!(mu >= 0.0 && mu < 1.0)) throw ConfigError("mixing parameter must lie in [0, 1)");
  if (!(avg_degree > 0.0) || avg_degree >= static_cast<double>(n))
    throw ConfigError("average degree must lie in (0, n)");
  if (min_community < 2 || min_community > max_community || max_community > n)
    throw ConfigError("community size bounds must satisfy 2 <= min <= max <= n");
  if ((1.0 - mu) * avg_degree >= static_cast<double>(min_community))
    throw ConfigError("expected intra-community degree must be below the minimum community size");
  if (mu > 0.0 && max_community >= n)
    throw ConfigError("a positive mixing parameter needs at least two communities");
}

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<std::size_t> draw_sizes(const BenchmarkSpec& spec, RngStream& rng) {
  std::vector<std::size_t> sizes;
  std::size_t covered = 0;
  while (covered < spec.n) {
    const std::size_t s =
        spec.min_community + rng.below(spec.max_community - spec.min_community + 1);
    sizes.push_back(s);
    covered += s;
  }
  sizes.back() -= covered - spec.n;
  // Top the trimmed community back up to the minimum from the others.
  std::size_t donor = 0;
  while (sizes.back() < spec.min_community && sizes.size() > 1) {
    bool moved = false;
    for (std::size_t tries = 0; tries + 1 < sizes.size(); ++tries) {
      donor = (donor + 1) % (sizes.size() - 1);
      if (sizes[donor] > spec.min_community) {
        --sizes[donor];
        ++sizes.back();
        moved = true;
        break;
      }
    }
    if (!moved) {
      // Every other community sits at the minimum: fold the remainder in.
      const std::size_t rest = sizes.back();
      sizes.pop_back();
      for (std::size_t i = 0; i < rest; ++i) ++sizes[i % sizes.size()];
      break;
    }
  }
  return sizes;
}

}  // namespace

GroundTruthGraph generate_planted(const BenchmarkSpec& spec) {
  spec.validate();
  RngStream rng(spec.seed, StreamPurpose::generator);

  const auto sizes = draw_sizes(spec, rng);
  if (spec.mu > 0.0 && sizes.size() < 2)
    throw ConfigError("a positive mixing parameter needs at least two communities");

  std::vector<NodeId> order(spec.n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng.engine());

  std::vector<Label> truth(spec.n);
  std::vector<std::vector<NodeId>> members(sizes.size());
  std::size_t next = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t k = 0; k < sizes[c]; ++k) {
      const NodeId v = order[next++];
      truth[v] = static_cast<Label>(c);
      members[c].push_back(v);
    }
  }
  for (auto& m : members) std::sort(m.begin(), m.end());

  constexpr int max_attempts = 100;
  std::unordered_set<std::uint64_t> present;
  std::vector<Edge> edges;
  std::size_t dropped = 0;

  for (const auto& m : members) {
    const double target = static_cast<double>(m.size()) * (1.0 - spec.mu) * spec.avg_degree / 2.0;
    const auto wanted = static_cast<std::size_t>(std::llround(target));
    for (std::size_t e = 0; e < wanted; ++e) {
      bool placed = false;
      for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
        const NodeId u = m[rng.below(m.size())];
        const NodeId v = m[rng.below(m.size())];
        if (u == v || !present.insert(edge_key(u, v)).second) continue;
        edges.emplace_back(u, v);
        placed = true;
      }
      if (!placed) ++dropped;
    }
  }

  std::size_t inter = 0;
  const auto wanted_inter = static_cast<std::size_t>(
      std::llround(static_cast<double>(spec.n) * spec.mu * spec.avg_degree / 2.0));
  for (std::size_t e = 0; e < wanted_inter; ++e) {
    bool placed = false;
    for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
      const NodeId u = static_cast<NodeId>(rng.below(spec.n));
      const NodeId v = static_cast<NodeId>(rng.below(spec.n));
      if (truth[u] == truth[v] || !present.insert(edge_key(u, v)).second) continue;
      edges.emplace_back(u, v);
      placed = true;
      ++inter;
    }
    if (!placed) ++dropped;
  }

  GroundTruthGraph out;
  out.graph = Graph::from_edges(spec.n, edges);
  out.truth = Partition(std::move(truth));
  out.dropped_edges = dropped;
  out.realized_mu = out.graph.edge_count() == 0
                        ? 0.0
                        : static_cast<double>(inter) / static_cast<double>(out.graph.edge_count());
  return out;
}

}  // namespace commevo
