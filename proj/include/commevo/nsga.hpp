#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "commevo/objectives.hpp"
#include "commevo/partition.hpp"
#include "commevo/rng.hpp"

namespace commevo {

// a is no worse in both coordinates and strictly better in one (minimization).
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
  return a.intra <= b.intra && a.inter <= b.inter && (a.intra < b.intra || a.inter < b.inter);
}

// fronts[0] is the non-dominated set, fronts[1] the non-dominated set of the
// remainder, and so on. Indices inside a front are ascending.
using Fronts = std::vector<std::vector<std::size_t>>;

// Two-objective sweep in O(N log N): sort by (intra, inter), then place each
// point in the first front whose smallest `inter` is larger than its own.
// Identical vectors share a front.
Fronts nondominated_sort(std::span<const ObjectiveVector> points);

// Crowding distance of each member of one front. Boundary points of every
// objective are +inf; interior points sum range-normalized neighbor gaps.
// An objective with zero range contributes nothing to interior points.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

inline constexpr double infinite_crowding = std::numeric_limits<double>::infinity();

struct Individual {
  Partition partition;
  ObjectiveVector objectives;
  std::size_t rank = 0;  // 1 = non-dominated
  double crowding = 0.0;
  std::uint64_t epoch = 0;  // population epoch the rank/crowding belong to
};

// A population together with an epoch counter. Any change bumps the epoch;
// rank() recomputes rank and crowding and stamps every member with it.
class Population {
 public:
  Population() = default;

  void add(Individual ind);
  void add(Partition p, ObjectiveVector v);
  void reserve(std::size_t n) { members_.reserve(n); }

  void rank();
  bool ranked() const noexcept;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const Individual& operator[](std::size_t i) const { return members_[i]; }
  std::span<const Individual> members() const noexcept { return members_; }
  std::uint64_t epoch() const noexcept { return epoch_; }

  // Moves the members out; the population is left empty.
  std::vector<Individual> release();

 private:
  std::vector<Individual> members_;
  std::uint64_t epoch_ = 1;
};

// Lower rank wins; equal rank, larger crowding wins.
// Returns +1 if a is preferred, -1 if b is, 0 on a full tie.
int crowded_compare(const Individual& a, const Individual& b) noexcept;

// `count` independent binary tournaments; returns winner indices.
// Throws ContractError if the population is empty or its ranking is stale.
std::vector<std::size_t> tournament_select(const Population& pop, std::size_t count,
                                           RngStream& rng);

// Ranks `combined` (which must hold exactly 2 * survivors members), admits
// whole fronts in rank order and truncates the first overflowing front by
// descending crowding distance, ties kept in input order. The returned
// population keeps the rank/crowding computed on `combined` but is unranked
// with respect to itself.
Population environmental_selection(Population combined, std::size_t survivors);

}  // namespace commevo
