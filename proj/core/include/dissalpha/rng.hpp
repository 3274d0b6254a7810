#pragma once

#include <cstdint>
#include <limits>

namespace dissalpha {

/// SplitMix64 (Steele, Lea, Flood 2014). Satisfies UniformRandomBitGenerator.
/// Substreams for parallel work come from split(), which mixes the parent
/// seed with a stream index, so results do not depend on scheduling.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 split(std::uint64_t seed, std::uint64_t stream) noexcept {
    return SplitMix64(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ULL)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace dissalpha
