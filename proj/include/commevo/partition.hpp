#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace commevo {

using Label = std::uint32_t;

// Crisp clustering: one community label per node.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Label> labels) : labels_(std::move(labels)) {}

  static Partition singletons(std::size_t n);
  static Partition single_community(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t v) const { return labels_[v]; }
  Label& operator[](std::size_t v) { return labels_[v]; }

  std::span<const Label> labels() const noexcept { return labels_; }
  std::vector<Label>& labels() noexcept { return labels_; }

  std::size_t community_count() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Label> labels_;
};

// Relabels communities 0..k-1 in order of first appearance.
Partition canonicalize(const Partition& p);

}  // namespace commevo
