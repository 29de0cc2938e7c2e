#pragma once

#include <cstdint>

namespace latkit {

// SplitMix64 step; used to expand user seeds into generator state.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xorshift64* (Vigna). The state is seeded with one SplitMix64 step of the
// user seed, so seed 0 is valid and nearby seeds give unrelated streams.
class Xorshift64Star {
 public:
  explicit constexpr Xorshift64Star(std::uint64_t seed) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
  }

  constexpr std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform in [0,1) with 53 bits of resolution.
  constexpr double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0,bound); bound > 0. Modulo bias is irrelevant at these sizes.
  constexpr std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_ = 0;
};

}  // namespace latkit
