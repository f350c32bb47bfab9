#pragma once

#include <cstdint>
#include <random>

namespace bvp {

// 64-bit finalizer used wherever a derived seed is needed (bootstrap
// replicates, study cells). Fixed so parallel runs reproduce serial output.
std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed of replicate b (1-based) of a run seeded with `seed`.
inline std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t b) {
  return splitmix64(seed ^ b);
}

// Deterministic stream of doubles in [0, 1) with 53-bit resolution.
// The mapping from engine output is explicit so results do not depend on the
// standard library's distribution implementation.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : eng_(seed) {}

  double next() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bvp
