#include "implinet/random.hpp"

#include "implinet/errors.hpp"

namespace implinet {

SeededRandom::SeededRandom(std::uint64_t seed) : seed_(seed), engine_(seed) {}

bool SeededRandom::uniform_bit() { return (engine_() & 1u) != 0; }

std::uint64_t SeededRandom::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: bound must be >= 1");
  // Rejection below `threshold` keeps the remaining range an exact
  // multiple of bound, so the modulo is unbiased.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t word = engine_();
    if (word >= threshold) return word % bound;
  }
}

}  // namespace implinet
