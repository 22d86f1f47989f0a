#pragma once

#include <cstdint>

namespace ssrm {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the k-th draw of a stream depends only on (seed, k),
/// so any range of a stream can be produced independently of the others.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
      : key_(mix64(seed ^ 0x5851F42D4C957F2DULL)), counter_(counter) {}

  constexpr std::uint64_t at(std::uint64_t k) const { return mix64(key_ + (k + 1) * kGamma); }

  std::uint64_t next_u64() { return at(counter_++); }

  /// Uniform on the open interval (0, 1).
  double next_uniform() { return to_open_unit(next_u64()); }

  /// Standard normal draw by inverse CDF.
  double next_normal();

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  std::uint64_t counter() const { return counter_; }

  static constexpr double to_open_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

/// Standard normal value of draw k of the stream, identical to what next_normal
/// returns at counter k.
double normal_at(const CounterRng& rng, std::uint64_t k);

}  // namespace ssrm
