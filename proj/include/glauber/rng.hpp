#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace glauber {

/// Seeded stream over std::mt19937_64. Index and real draws are derived here, not through
/// <random> distributions, so traces reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound) by rejection from the full 64-bit range (no modulo bias).
  std::size_t uniform_index(std::size_t bound);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace glauber
