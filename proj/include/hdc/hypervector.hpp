#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hdc/errors.hpp"
#include "hdc/rng.hpp"

namespace hdc {

// Binary hypervector with runtime dimension, bit-packed into 64-bit words.
// Invariant: bits at index >= dim are zero (kept by every operation), so
// word-level kernels never need per-bit masking on the read side.
class Hypervector {
 public:
  static constexpr std::size_t kWordBits = 64;

  Hypervector() = default;

  explicit Hypervector(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {
    if (dim == 0) throw ConfigError("Hypervector: dim must be > 0");
  }

  static std::size_t word_count(std::size_t dim) { return (dim + kWordBits - 1) / kWordBits; }

  std::size_t dim() const { return dim_; }
  std::size_t words() const { return words_.size(); }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1ULL; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = 1ULL << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }

  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  // Zeroes any bits beyond dim in the last word. Call after writing raw words.
  void mask_tail() {
    const std::size_t excess = words_.size() * kWordBits - dim_;
    if (excess > 0) words_.back() &= ~0ULL >> excess;
  }

  bool operator==(const Hypervector& o) const { return dim_ == o.dim_ && words_ == o.words_; }
  bool operator!=(const Hypervector& o) const { return !(*this == o); }

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// i.i.d. Bernoulli(0.5) bits; deterministic for a given generator state.
inline Hypervector random_hv(std::size_t dim, SplitMix64& rng) {
  Hypervector hv(dim);
  for (std::size_t w = 0; w < hv.words(); ++w) hv.data()[w] = rng.next();
  hv.mask_tail();
  return hv;
}

inline Hypervector random_hv(std::size_t dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_hv(dim, rng);
}

// Bitwise XOR. Self-inverse, commutative, associative, distance-preserving.
inline Hypervector bind(const Hypervector& a, const Hypervector& b) {
  if (a.dim() != b.dim()) throw ConfigError("bind: dimension mismatch");
  Hypervector out(a.dim());
  for (std::size_t w = 0; w < a.words(); ++w) out.data()[w] = a.data()[w] ^ b.data()[w];
  return out;
}

// Normalized Hamming distance: popcount(a XOR b) / dim, in [0, 1].
inline double hamming(const Hypervector& a, const Hypervector& b) {
  if (a.dim() != b.dim()) throw ConfigError("hamming: dimension mismatch");
  std::size_t count = 0;
  for (std::size_t w = 0; w < a.words(); ++w)
    count += static_cast<std::size_t>(std::popcount(a.data()[w] ^ b.data()[w]));
  return static_cast<double>(count) / static_cast<double>(a.dim());
}

// Bits [start, end) as a new hypervector of dim end - start.
inline Hypervector slice(const Hypervector& hv, std::size_t start, std::size_t end) {
  if (start >= end || end > hv.dim()) throw ConfigError("slice: out-of-range [start, end)");
  Hypervector out(end - start);
  const std::size_t word_shift = start / Hypervector::kWordBits;
  const std::size_t bit_shift = start % Hypervector::kWordBits;
  if (bit_shift == 0) {
    for (std::size_t w = 0; w < out.words(); ++w) out.data()[w] = hv.data()[w + word_shift];
  } else {
    for (std::size_t w = 0; w < out.words(); ++w) {
      std::uint64_t lo = hv.data()[w + word_shift] >> bit_shift;
      std::uint64_t hi = (w + word_shift + 1 < hv.words())
                             ? hv.data()[w + word_shift + 1] << (Hypervector::kWordBits - bit_shift)
                             : 0;
      out.data()[w] = lo | hi;
    }
  }
  out.mask_tail();
  return out;
}

// Concatenation in argument order; output dim is the sum of input dims.
inline Hypervector concat(const std::vector<Hypervector>& parts) {
  if (parts.empty()) throw ConfigError("concat: empty input");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  Hypervector out(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.dim(); ++i)
      if (p.get(i)) out.set(offset + i, true);
    offset += p.dim();
  }
  return out;
}

inline Hypervector complement(const Hypervector& a) {
  Hypervector out(a.dim());
  for (std::size_t w = 0; w < a.words(); ++w) out.data()[w] = ~a.data()[w];
  out.mask_tail();
  return out;
}

// Reserved stream for the deterministic tie-break vector used by thresholding.
// Fixed so that the same dim yields the same vector across runs and builds.
inline constexpr std::uint64_t kTieBreakSeed = 0x7c13a5b0d2e94611ULL;

inline Hypervector tie_break_hv(std::size_t dim) {
  return random_hv(dim, derive_key(kTieBreakSeed, dim));
}

}  // namespace hdc
