#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "implinet/random.hpp"

namespace implinet {

/// Fixed-width binary word, the label carried by every network node.
/// Bit index 1 is the leftmost character of the text form; widths from 1
/// to 64 are supported so a value always fits one machine word. The width
/// of a value never changes after construction.
class BitString {
 public:
  static constexpr int kMaxWidth = 64;

  /// Width-1 zero string.
  BitString() = default;

  /// Value with the given width; the high bits beyond `width` must be zero.
  BitString(int width, std::uint64_t value);

  /// Exact inverse of to_string: accepts only '0'/'1' characters.
  static BitString parse(std::string_view text);

  /// Renders exactly width() characters, bit 1 first.
  std::string to_string() const;

  int width() const { return width_; }
  std::uint64_t value() const { return value_; }

  /// Bit at 1-based index, index 1 = leftmost.
  bool bit(int index) const;

  int popcount() const;

  bool operator==(const BitString& o) const = default;

 private:
  int width_ = 1;
  std::uint64_t value_ = 0;
};

/// The implication order: a -> c iff every bit of a is <= the matching bit
/// of c. Widths must agree.
bool implies(const BitString& a, const BitString& c);

/// Collapse: each set bit independently keeps its 1 or drops to 0 with
/// probability 0.5; clear bits stay clear. Draws happen in ascending bit
/// index order, one per set bit. The result always implies the input.
BitString collapse(const BitString& a, RandomSource& random);

/// Expand: the mirror of collapse. Set bits stay set; each clear bit
/// independently becomes 1 with probability 0.5, drawn in ascending index
/// order. The input always implies the result.
BitString expand(const BitString& a, RandomSource& random);

struct DeducedPair {
  BitString left;
  BitString right;
  /// Rounds discarded because collapse and expand both returned the
  /// input unchanged.
  int rejection_rounds = 0;
};

/// Draws collapse(p) and expand(p) as a pair, redrawing both from p until
/// the two sides differ. Since left <= p <= right bitwise, equality of the
/// sides is only possible when nothing changed, so this is rejection
/// sampling of "at least one bit moved". Each round draws collapse bits
/// first, then expand bits. Termination is almost sure; a 10000-round cap
/// throws InternalError as a defect canary.
DeducedPair deduce_pair(const BitString& p, RandomSource& random);

}  // namespace implinet
