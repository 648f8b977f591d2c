// SPDX-License-Identifier: Apache-2.0
//
// Seeded random streams with a fixed splitting rule.
//
// Every Monte Carlo work unit (a drop, a sweep distance) draws from its own
// stream whose seed is derived from the run seed and the unit index:
//
//   stream_seed(seed, index) = splitmix64(seed XOR splitmix64(index + 1))
//
// so results depend only on (seed, index) and never on scheduling.

#pragma once

#include <cstdint>
#include <random>

namespace emfsim {

/// One step of the splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t seed, std::uint64_t index) : engine_(stream_seed(seed, index)) {}

  /// Uniform on [0, 1) with 53 random bits; identical on every platform.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace emfsim
