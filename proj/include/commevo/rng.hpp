#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace commevo {

enum class StreamPurpose : std::uint64_t {
  initialization = 1,
  offspring = 2,
  tournament = 3,
  generator = 4,
  experiment = 5,
};

// Deterministic stream keyed by (seed, purpose, generation, index). Streams
// are never shared between workers, so results do not depend on scheduling.
class RngStream {
 public:
  using engine_type = std::mt19937_64;

  explicit RngStream(std::uint64_t seed, StreamPurpose purpose = StreamPurpose::experiment,
                     std::uint64_t generation = 0, std::uint64_t index = 0);

  // Uniform in [0, 1).
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  // Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  engine_type& engine() noexcept { return engine_; }

 private:
  engine_type engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace commevo
