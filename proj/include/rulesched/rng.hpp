#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace rulesched {

/// SplitMix64 mixing step, used to scramble derived stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream with an exact draw budget: every public draw
/// consumes exactly one engine step, so stream alignment between caller and
/// callee is checkable via draws().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  /// Uniform index in [0, n). Single draw; uses the 128-bit multiply trick,
  /// bias is below n / 2^64.
  std::size_t uniform_index(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Uniform integer in [lo, hi], inclusive. Single draw.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(uniform_index(span));
  }

  /// Uniform double in [0, 1) with 53 random bits. Single draw.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Fair coin. Single draw.
  bool coin() { return (next_u64() & 1ULL) != 0; }

  /// Child stream seeded from this one; consumes exactly one draw.
  Rng spawn() { return Rng(splitmix64(next_u64())); }

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace rulesched
