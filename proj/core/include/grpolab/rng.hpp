#pragma once

#include <cstdint>

namespace grpolab {

/// Counter-style seeded random stream (splitmix64 core).
///
/// Streams are cheap value types. `substream(key...)` derives an independent
/// child stream from the *construction* seed, not from the advancing state,
/// so the draw count of one consumer never shifts the values seen by another.
/// This is what makes rollouts byte-identical across training variants that
/// consume different amounts of auxiliary randomness.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  int next_int(int bound) {
    const auto b = static_cast<std::uint64_t>(bound);
    return static_cast<int>(
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * b) >> 64));
  }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Independent child stream keyed off the construction seed.
  RngStream substream(std::uint64_t key) const { return RngStream(mix(seed_, key)); }
  RngStream substream(std::uint64_t a, std::uint64_t b) const {
    return RngStream(mix(mix(seed_, a), b));
  }
  RngStream substream(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return RngStream(mix(mix(mix(seed_, a), b), c));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t s, std::uint64_t key) {
    std::uint64_t z = s ^ (key + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace grpolab
