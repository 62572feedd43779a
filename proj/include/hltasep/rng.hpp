#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace hltasep {

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Reproducible random stream keyed by (seed, replica). The xoshiro256**
/// state is derived by hashing the key through SplitMix64, so a replica's
/// stream does not depend on which worker runs it or in which order.
class ReplicaRng {
 public:
  using result_type = std::uint64_t;

  ReplicaRng(std::uint64_t seed, std::uint64_t replica) {
    std::uint64_t mix = seed;
    std::uint64_t key = splitmix64(mix);
    std::uint64_t rep = replica ^ 0xD1B54A32D192ED03ULL;
    key ^= splitmix64(rep);
    for (auto& word : s_) word = splitmix64(key);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0, 1).
  double uniform01() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace hltasep
