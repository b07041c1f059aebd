#pragma once

#include <cstdint>
#include <limits>

namespace tourlab {

/// 64-bit seed; identical seed and parameters give bit-identical output.
struct Seed {
  std::uint64_t value = 0;
};

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// Counter-based draw: a pure function of (seed, stream, counter), so any
/// element of a stream can be generated independently of iteration order.
constexpr std::uint64_t counter_draw(Seed seed, std::uint64_t stream,
                                     std::uint64_t counter) noexcept {
  const std::uint64_t key = mix64(seed.value + kGolden * (stream + 1));
  return mix64(key ^ mix64(counter * kGolden + 0x632be59bd9b4e019ULL));
}

/// Sequential SplitMix64 generator; models UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// Stream identifiers keep draws of different constructions disjoint.
namespace streams {
inline constexpr std::uint64_t kTnp = 1;
inline constexpr std::uint64_t kTransversal = 2;
inline constexpr std::uint64_t kPacking = 3;
inline constexpr std::uint64_t kMonteCarlo = 4;
}  // namespace streams

}  // namespace tourlab
