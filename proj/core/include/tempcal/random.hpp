#pragma once

// Seeded, platform-independent random streams.
//
// The engine is std::mt19937_64 (MT19937-64, Matsumoto & Nishimura), whose
// output sequence is fixed by the C++ standard: a default-seeded engine's
// 10000th draw is 9981545732273789042. The standard library's distributions
// are implementation-defined, so every transform from raw 64-bit draws to
// doubles, normals and bounded integers is defined here instead.

#include <cstddef>
#include <cstdint>
#include <random>

namespace tempcal {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via the Box-Muller transform. Draws come in pairs; the
  /// second value of each pair is returned by the following call.
  double normal();

  /// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tempcal
