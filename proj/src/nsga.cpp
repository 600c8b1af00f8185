#include "commevo/nsga.hpp"

#include <algorithm>
#include <numeric>

#include "commevo/errors.hpp"

namespace commevo {

Fronts nondominated_sort(std::span<const ObjectiveVector> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = points[a];
    const auto& pb = points[b];
    if (pa.intra != pb.intra) return pa.intra < pb.intra;
    if (pa.inter != pb.inter) return pa.inter < pb.inter;
    return a < b;
  });

  Fronts fronts;
  // Smallest `inter` seen so far in each front; strictly increasing in the
  // front index.
  std::vector<double> front_min_inter;
  std::size_t previous_front = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& p = points[order[k]];
    std::size_t f;
    if (k > 0 && points[order[k - 1]] == p) {
      f = previous_front;
    } else {
      f = static_cast<std::size_t>(
          std::upper_bound(front_min_inter.begin(), front_min_inter.end(), p.inter) -
          front_min_inter.begin());
    }
    if (f == fronts.size()) {
      fronts.emplace_back();
      front_min_inter.push_back(p.inter);
    }
    fronts[f].push_back(order[k]);
    front_min_inter[f] = std::min(front_min_inter[f], p.inter);
    previous_front = f;
  }
  for (auto& front : fronts) std::sort(front.begin(), front.end());
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
  const std::size_t n = front.size();
  std::vector<double> distance(n, 0.0);
  if (n <= 2) {
    std::fill(distance.begin(), distance.end(), infinite_crowding);
    return distance;
  }
  std::vector<std::size_t> order(n);
  for (auto coord : {&ObjectiveVector::intra, &ObjectiveVector::inter}) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return front[a].*coord < front[b].*coord;
    });
    distance[order.front()] = infinite_crowding;
    distance[order.back()] = infinite_crowding;
    const double range = front[order.back()].*coord - front[order.front()].*coord;
    if (range <= 0.0) continue;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      double& d = distance[order[k]];
      if (d == infinite_crowding) continue;
      d += (front[order[k + 1]].*coord - front[order[k - 1]].*coord) / range;
    }
  }
  return distance;
}

void Population::add(Individual ind) {
  ++epoch_;
  members_.push_back(std::move(ind));
}

void Population::add(Partition p, ObjectiveVector v) {
  add(Individual{std::move(p), v, 0, 0.0, 0});
}

void Population::rank() {
  ++epoch_;
  std::vector<ObjectiveVector> points;
  points.reserve(members_.size());
  for (const auto& m : members_) points.push_back(m.objectives);
  const Fronts fronts = nondominated_sort(points);
  std::vector<ObjectiveVector> front_points;
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    front_points.clear();
    for (std::size_t idx : fronts[f]) front_points.push_back(points[idx]);
    const auto crowd = crowding_distance(front_points);
    for (std::size_t k = 0; k < fronts[f].size(); ++k) {
      auto& m = members_[fronts[f][k]];
      m.rank = f + 1;
      m.crowding = crowd[k];
      m.epoch = epoch_;
    }
  }
}

bool Population::ranked() const noexcept {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const Individual& m) { return m.epoch == epoch_; });
}

std::vector<Individual> Population::release() {
  ++epoch_;
  return std::exchange(members_, {});
}

int crowded_compare(const Individual& a, const Individual& b) noexcept {
  if (a.rank != b.rank) return a.rank < b.rank ? 1 : -1;
  if (a.crowding != b.crowding) return a.crowding > b.crowding ? 1 : -1;
  return 0;
}

std::vector<std::size_t> tournament_select(const Population& pop, std::size_t count,
                                           RngStream& rng) {
  if (pop.empty()) throw ContractError("tournament on an empty population");
  if (!pop.ranked()) throw ContractError("tournament on a population with stale ranks");
  std::vector<std::size_t> winners;
  winners.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t a = rng.below(pop.size());
    const std::size_t b = rng.below(pop.size());
    const int cmp = crowded_compare(pop[a], pop[b]);
    if (cmp > 0)
      winners.push_back(a);
    else if (cmp < 0)
      winners.push_back(b);
    else
      winners.push_back(rng.below(2) == 0 ? a : b);
  }
  return winners;
}

Population environmental_selection(Population combined, std::size_t survivors) {
  if (combined.size() != 2 * survivors)
    throw ContractError("environmental selection expects exactly twice the survivor count");
  combined.rank();
  std::vector<Individual> members = combined.release();

  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].rank != members[b].rank) return members[a].rank < members[b].rank;
    return members[a].crowding > members[b].crowding;
  });

  Population next;
  next.reserve(survivors);
  for (std::size_t k = 0; k < survivors; ++k) next.add(std::move(members[order[k]]));
  return next;
}

}  // namespace commevo
