#include <cstdint>
#include <vector>

#include <doctest.h>

#include <implinet/errors.hpp>
#include <implinet/random.hpp>

#include "support/scripted_random.hpp"

using implinet::InputError;
using implinet::SeededRandom;
using implinet::test::ScriptedRandom;

namespace {

constexpr double kChi2Df1 = 10.828;
constexpr double kChi2Df2 = 13.816;
constexpr double kChi2Df5 = 20.515;

double chi_square(const std::vector<std::size_t>& counts, double expected) {
  double chi2 = 0.0;
  for (const std::size_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

}  // namespace

TEST_CASE("identical seeds give identical streams") {
  SeededRandom a(42);
  SeededRandom b(42);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.uniform_below(1000) == b.uniform_below(1000));
    CHECK(a.uniform_bit() == b.uniform_bit());
  }
  CHECK(a.seed() == 42);
}

TEST_CASE("different seeds give different streams") {
  SeededRandom a(1);
  SeededRandom b(2);
  int differing = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.uniform_bit() != b.uniform_bit()) ++differing;
  }
  CHECK(differing > 0);
}

TEST_CASE("uniform_below input validation and degenerate bound") {
  SeededRandom r(7);
  CHECK_THROWS_AS(r.uniform_below(0), InputError);
  for (int i = 0; i < 100; ++i) {
    CHECK(r.uniform_below(1) == 0);
  }
}

TEST_CASE("uniform_below stays below the bound") {
  SeededRandom r(99);
  for (int i = 0; i < 10000; ++i) {
    CHECK(r.uniform_below(7) < 7);
  }
}

TEST_CASE("uniform_below(6) is uniform") {
  SeededRandom r(2718);
  std::vector<std::size_t> counts(6, 0);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) {
    ++counts[r.uniform_below(6)];
  }
  CHECK(chi_square(counts, draws / 6.0) < kChi2Df5);
}

TEST_CASE("uniform_below(3) shows no rejection bias") {
  SeededRandom r(314159);
  std::vector<std::size_t> counts(3, 0);
  const int draws = 90000;
  for (int i = 0; i < draws; ++i) {
    ++counts[r.uniform_below(3)];
  }
  CHECK(chi_square(counts, draws / 3.0) < kChi2Df2);
}

TEST_CASE("uniform_bit is a fair coin") {
  SeededRandom r(161803);
  std::vector<std::size_t> counts(2, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    ++counts[r.uniform_bit() ? 1 : 0];
  }
  CHECK(chi_square(counts, draws / 2.0) < kChi2Df1);
}

TEST_CASE("scripted source replays draws in order and checks misuse") {
  ScriptedRandom r;
  r.bit(true).below(5).bit(false);
  CHECK(r.uniform_bit());
  CHECK(r.uniform_below(10) == 5);
  CHECK_FALSE(r.uniform_bit());
  CHECK(r.exhausted());
  CHECK_THROWS(r.uniform_bit());

  ScriptedRandom kind_mismatch;
  kind_mismatch.bit(true);
  CHECK_THROWS(kind_mismatch.uniform_below(2));

  ScriptedRandom out_of_bound;
  out_of_bound.below(5);
  CHECK_THROWS(out_of_bound.uniform_below(5));
}
