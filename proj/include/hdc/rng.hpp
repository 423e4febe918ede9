#pragma once

#include <cstdint>

namespace hdc {

// Identifies the word generator used for all reproducible randomness in this
// library. Persisted in item-memory containers so stored tables can be
// regenerated from (seed, kind, index) alone. Bump only when the algorithm
// below changes.
inline constexpr std::uint32_t kPrngId = 1;  // splitmix64, v1

// SplitMix64: counter-based, splittable by key mixing. Each draw is a pure
// function of the state, so streams derived with derive_key() never overlap
// in practice.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Rejection-free modulo is fine here: bound is tiny
  // compared to 2^64 in every use, so the bias is far below measurement.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream key from a base seed and up to two indices
// (e.g. item-memory kind and entry index). Stateless and order-free.
inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hdc
