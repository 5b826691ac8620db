#include "implinet/bitstring.hpp"

#include <bit>

#include "implinet/errors.hpp"

namespace implinet {

namespace {

void check_width(int width) {
  if (width < 1 || width > BitString::kMaxWidth)
    throw InputError("BitString width must be in [1, 64], got " +
                     std::to_string(width));
}

}  // namespace

BitString::BitString(int width, std::uint64_t value)
    : width_(width), value_(value) {
  check_width(width);
  if (width < 64 && (value >> width) != 0)
    throw InputError("BitString value has bits beyond width " +
                     std::to_string(width));
}

BitString BitString::parse(std::string_view text) {
  check_width(static_cast<int>(text.size()));
  std::uint64_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw InputError(std::string("BitString text must be '0'/'1', got '") +
                       c + "'");
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), value);
}

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 1; i <= width_; ++i)
    if (bit(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  return out;
}

bool BitString::bit(int index) const {
  if (index < 1 || index > width_)
    throw InputError("BitString bit index out of range: " +
                     std::to_string(index));
  return (value_ >> (width_ - index)) & 1u;
}

int BitString::popcount() const { return std::popcount(value_); }

bool implies(const BitString& a, const BitString& c) {
  if (a.width() != c.width())
    throw InputError("implies: width mismatch (" + std::to_string(a.width()) +
                     " vs " + std::to_string(c.width()) + ")");
  // Index-wise a_i <= c_i for all i, as a single word operation.
  return (a.value() & ~c.value()) == 0;
}

BitString collapse(const BitString& a, RandomSource& random) {
  std::uint64_t value = 0;
  for (int i = 1; i <= a.width(); ++i) {
    value <<= 1;
    if (a.bit(i) && random.uniform_bit()) value |= 1u;
  }
  return BitString(a.width(), value);
}

BitString expand(const BitString& a, RandomSource& random) {
  std::uint64_t value = 0;
  for (int i = 1; i <= a.width(); ++i) {
    value <<= 1;
    if (a.bit(i) || random.uniform_bit()) value |= 1u;
  }
  return BitString(a.width(), value);
}

DeducedPair deduce_pair(const BitString& p, RandomSource& random) {
  constexpr int kRoundCap = 10000;
  DeducedPair out;
  for (int round = 0; round < kRoundCap; ++round) {
    out.left = collapse(p, random);
    out.right = expand(p, random);
    if (!(out.left == out.right)) {
      out.rejection_rounds = round;
      return out;
    }
  }
  throw InternalError("deduce_pair: no distinct pair after 10000 rounds");
}

}  // namespace implinet
