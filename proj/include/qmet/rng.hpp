#pragma once

#include <cstdint>

namespace qmet {

/// SplitMix64 finalizer. Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

/// Seed for the i-th independent substream of a master seed.
/// Decorrelated from direct outputs of Rng(master) by the salt.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t i) {
  return mix64((master ^ 0x94D049BB133111EBULL) + (i + 1) * 0xD1342543DE82EF95ULL);
}

/// Counter-based generator: output n is mix64(seed + n * golden), n = 1, 2, ...
/// Stateless apart from the counter, so sequences are reproducible across
/// platforms and insensitive to call order elsewhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), n_(0) {}

  std::uint64_t next_u64() {
    ++n_;
    return mix64(seed_ + n_ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t n_;
};

}  // namespace qmet
