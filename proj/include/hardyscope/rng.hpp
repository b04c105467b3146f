#pragma once

#include <cstdint>
#include <initializer_list>

namespace hardyscope {

/// SplitMix64 step (Vigna's fixed-increment variant). Used for seeding and
/// for deriving independent substream seeds from a root seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic substream seed: root seed mixed with a path of indices
/// (operation tag, radius index, batch index, ...). Same path, same seed,
/// independent of thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = root;
  (void)splitmix64_next(s);
  for (std::uint64_t k : path) {
    s ^= k + 0x9E3779B97F4A7C15ULL + (s << 6) + (s >> 2);
    (void)splitmix64_next(s);
  }
  return s;
}

/// xoshiro256++ generator. Satisfies UniformRandomBitGenerator; uniform
/// doubles are produced by the 53-bit mantissa trick so the stream is
/// bit-identical across platforms and standard libraries.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed = 0) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform double in [0, 2*pi).
  double uniform_angle() { return uniform() * 6.283185307179586476925286766559; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

}  // namespace hardyscope
