#include "commevo/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace commevo {

Partition Partition::singletons(std::size_t n) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{0});
  return Partition(std::move(labels));
}

Partition Partition::single_community(std::size_t n) {
  return Partition(std::vector<Label>(n, 0));
}

std::size_t Partition::community_count() const {
  std::vector<Label> distinct(labels_);
  std::sort(distinct.begin(), distinct.end());
  return static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) -
                                  distinct.begin());
}

Partition canonicalize(const Partition& p) {
  std::unordered_map<Label, Label> remap;
  remap.reserve(p.size());
  std::vector<Label> out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    auto [it, inserted] = remap.try_emplace(p[v], static_cast<Label>(remap.size()));
    out[v] = it->second;
  }
  return Partition(std::move(out));
}

}  // namespace commevo
