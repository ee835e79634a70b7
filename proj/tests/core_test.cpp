#include "emoa/core.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstddef>
#include <vector>

namespace emoa {
namespace {

using testing::ScriptedSource;

TEST(Bitstring, CountsOnesAndZeros) {
  EXPECT_EQ(ones_count(Bitstring::from_string("0000")), 0U);
  EXPECT_EQ(ones_count(Bitstring::from_string("1111")), 4U);
  EXPECT_EQ(ones_count(Bitstring::from_string("10110")), 3U);
  EXPECT_EQ(zeros_count(Bitstring::from_string("10110")), 2U);
}

TEST(Bitstring, MultiWordLengths) {
  for (std::size_t n : {1U, 63U, 64U, 65U, 130U}) {
    const auto ones = Bitstring::ones(n);
    EXPECT_EQ(ones.size(), n);
    EXPECT_EQ(ones.count_ones(), n);
    EXPECT_EQ(ones.complement(), Bitstring::zeros(n));
    EXPECT_EQ(Bitstring::with_ones(n, n / 2).count_ones(), n / 2);
  }
}

TEST(Bitstring, StringRoundTripAndBadInput) {
  EXPECT_EQ(Bitstring::from_string("0110100").to_string(), "0110100");
  EXPECT_THROW(Bitstring::from_string("01x"), invalid_parameter);
  EXPECT_THROW(Bitstring::with_ones(3, 4), invalid_parameter);
}

TEST(Bitstring, HammingDistance) {
  EXPECT_EQ(Bitstring::from_string("1010").hamming_distance(Bitstring::from_string("0110")), 2U);
  EXPECT_THROW((void)Bitstring(3).hamming_distance(Bitstring(4)), invalid_parameter);
}

TEST(RandomBitstring, SingleBitFollowsDraw) {
  ScriptedSource src;
  src.bits = {true};
  EXPECT_EQ(random_bitstring(1, src).to_string(), "1");
}

TEST(RandomBitstring, RejectsEmptyLength) {
  RandomSource rng(1);
  EXPECT_THROW(random_bitstring(0, rng), invalid_parameter);
}

TEST(RandomBitstring, SameSeedSameString) {
  RandomSource a(7);
  RandomSource b(7);
  EXPECT_EQ(random_bitstring(16, a), random_bitstring(16, b));
}

TEST(RandomBitstring, PositionFrequenciesAreHalf) {
  RandomSource rng(2024);
  constexpr std::size_t n = 20;
  constexpr int draws = 100'000;
  std::vector<int> ones(n, 0);
  double total_ones = 0;
  for (int d = 0; d < draws; ++d) {
    const auto x = random_bitstring(n, rng);
    total_ones += static_cast<double>(x.count_ones());
    for (std::size_t i = 0; i < n; ++i) ones[i] += x.test(i) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(ones[i] / static_cast<double>(draws), 0.5, 0.01) << "position " << i;
  }
  EXPECT_NEAR(total_ones / draws, 10.0, 0.05);
}

TEST(BitwiseMutate, NoFlipsKeepsInput) {
  ScriptedSource src;
  src.coins = {false, false, false};
  const auto x = Bitstring::from_string("101");
  EXPECT_EQ(bitwise_mutate(x, src).to_string(), "101");
}

TEST(BitwiseMutate, FlipsExactlyTheChosenPositions) {
  ScriptedSource src;
  src.coins = {true, false, false, true};
  const auto x = Bitstring::from_string("1010");
  const auto y = bitwise_mutate(x, src);
  EXPECT_EQ(y.to_string(), "0011");
  EXPECT_EQ(x.to_string(), "1010");
}

TEST(BitwiseMutate, LengthPreservedForAnySeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSource rng(seed);
    const std::size_t n = 1 + seed % 70;
    const auto x = random_bitstring(n, rng);
    EXPECT_EQ(bitwise_mutate(x, rng).size(), n);
  }
}

// Flip count ~ Binomial(20, 1/20): mean 1, P(0 flips) = (1 - 1/20)^20.
TEST(BitwiseMutate, FlipCountMatchesBinomial) {
  RandomSource rng(99);
  constexpr std::size_t n = 20;
  constexpr int trials = 100'000;
  const auto x = Bitstring::zeros(n);
  double flips = 0;
  int none = 0;
  for (int t = 0; t < trials; ++t) {
    const auto d = bitwise_mutate(x, rng).hamming_distance(x);
    flips += static_cast<double>(d);
    none += d == 0 ? 1 : 0;
  }
  EXPECT_NEAR(flips / trials, 1.0, 0.02);
  EXPECT_NEAR(none / static_cast<double>(trials), std::pow(1.0 - 1.0 / n, n), 0.01);
}

TEST(RandomSource, StreamsAreReproducibleAndDistinct) {
  auto a = RandomSource::for_stream(5, 1);
  auto b = RandomSource::for_stream(5, 1);
  auto c = RandomSource::for_stream(5, 2);
  std::vector<std::uint64_t> da, db, dc;
  for (int i = 0; i < 8; ++i) {
    da.push_back(a.uniform_below(1'000'000));
    db.push_back(b.uniform_below(1'000'000));
    dc.push_back(c.uniform_below(1'000'000));
  }
  EXPECT_EQ(da, db);
  EXPECT_NE(da, dc);
  EXPECT_THROW(a.uniform_below(0), invalid_parameter);
}

TEST(SampleWithoutReplacement, DistinctAndUniform) {
  RandomSource rng(3);
  constexpr std::size_t population = 7;
  constexpr std::size_t count = 3;
  constexpr int trials = 70'000;
  std::vector<int> hits(population, 0);
  for (int t = 0; t < trials; ++t) {
    auto s = rng.sample_subset(population, count);
    ASSERT_EQ(s.size(), count);
    std::sort(s.begin(), s.end());
    ASSERT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    for (auto i : s) ++hits[i];
  }
  for (auto h : hits) EXPECT_NEAR(h / static_cast<double>(trials), 3.0 / 7.0, 0.01);
  EXPECT_THROW(rng.sample_subset(3, 4), invalid_parameter);
}

}  // namespace
}  // namespace emoa
