#pragma once

#include <cstdint>
#include <random>

namespace implinet {

/// Source of the random draws consumed by the growth process. Every use
/// site draws in a fixed, documented order, so a run is reproducible from
/// the seed alone. The interface exists so tests can substitute a scripted
/// sequence; production code uses SeededRandom.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Fair coin: true with probability 0.5.
  virtual bool uniform_bit() = 0;

  /// Uniform integer in [0, bound). bound must be >= 1.
  virtual std::uint64_t uniform_below(std::uint64_t bound) = 0;
};

/// Deterministic RandomSource backed by std::mt19937_64 seeded directly
/// with the given seed. The draw scheme is part of the file-format-level
/// stability contract and must not change between versions:
///   - uniform_bit consumes one engine word and returns its low bit;
///   - uniform_below consumes engine words under unbiased rejection
///     (discard words below 2^64 mod bound, then reduce mod bound).
/// Identical seed implies an identical draw sequence.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed);

  bool uniform_bit() override;
  std::uint64_t uniform_below(std::uint64_t bound) override;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace implinet
