#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace vcyc {

/// Reproducible sampling source.
///
/// The engine is `std::mt19937_64`, whose output sequence is fixed by the C++
/// standard. Bounded integers are drawn by rejection sampling on the raw
/// 64-bit output (never through `std::uniform_int_distribution`, whose
/// algorithm is implementation-defined), so a seed produces the same sampled
/// inputs on every platform and in every binding.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
  }

  /// Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  bool coin() { return (next() >> 63) != 0; }

  int sign() { return coin() ? 1 : -1; }

  /// Independent stream derived from this one; used to give each check of a
  /// battery its own deterministic source.
  Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vcyc
