// Copyright 2026 The cirng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cirng/sources.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cirng/errors.hpp"

namespace cirng {
namespace {

constexpr std::uint64_t kGoldenSeed = 88172645463325252ULL;

std::vector<std::uint64_t> golden_words() {
  std::ifstream in(std::string(CIRNG_TEST_DATA_DIR) + "/xorshift64_golden.txt");
  std::vector<std::uint64_t> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    words.push_back(std::stoull(line, nullptr, 16));
  }
  return words;
}

TEST(XorShiftTest, MatchesGoldenWords) {
  const auto golden = golden_words();
  ASSERT_EQ(golden.size(), 32u);
  XorShift64 x(kGoldenSeed);
  for (std::uint64_t w : golden) EXPECT_EQ(x.next(), w);
}

TEST(XorShiftTest, RejectsZeroSeed) {
  EXPECT_THROW(XorShift64(0), InvalidArgument);
  EXPECT_THROW(EntropySource::xorshift(0), InvalidArgument);
}

TEST(XorShiftTest, StateNeverZero) {
  XorShift64 x(1);
  for (int i = 0; i < 100000; ++i) ASSERT_NE(x.next(), 0u);
}

TEST(EntropySourceTest, BitsAreLowBitsOfGoldenWords) {
  const auto golden = golden_words();
  auto src = EntropySource::xorshift(kGoldenSeed);
  EXPECT_EQ(src.kind(), EntropySource::Kind::xorshift);
  for (std::uint64_t w : golden) EXPECT_EQ(src.next_bit(), w & 1u);
}

TEST(EntropySourceTest, CoordinatesFromGoldenWords) {
  const auto golden = golden_words();
  auto src = EntropySource::xorshift(kGoldenSeed);
  for (std::uint64_t w : golden) {
    EXPECT_EQ(src.next_coordinate(5), w % 5 + 1);
  }
}

TEST(EntropySourceTest, IdenticalSeedsIdenticalStreams) {
  auto a = EntropySource::xorshift(0xDEADBEEF);
  auto b = EntropySource::xorshift(0xDEADBEEF);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.next_bit(), b.next_bit());
    ASSERT_EQ(a.next_coordinate(7), b.next_coordinate(7));
  }
}

TEST(EntropySourceTest, CoordinateFrequenciesForTwoBits) {
  auto src = EntropySource::xorshift(kGoldenSeed);
  int ones = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const unsigned c = src.next_coordinate(2);
    ASSERT_TRUE(c == 1 || c == 2);
    ones += c == 1;
  }
  EXPECT_GE(ones, draws * 49 / 100);
  EXPECT_LE(ones, draws * 51 / 100);
}

TEST(EntropySourceTest, CoordinatesStayInRange) {
  auto src = EntropySource::xorshift(12345);
  for (unsigned n = 2; n <= 16; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const unsigned c = src.next_coordinate(n);
      ASSERT_GE(c, 1u);
      ASSERT_LE(c, n);
    }
  }
}

TEST(ScriptedSourceTest, ReplaysBits) {
  auto src = EntropySource::scripted({0, 1, 0});
  EXPECT_EQ(src.kind(), EntropySource::Kind::scripted);
  EXPECT_EQ(src.next_bit(), 0u);
  EXPECT_EQ(src.next_bit(), 1u);
  EXPECT_EQ(src.next_bit(), 0u);
  EXPECT_THROW(src.next_bit(), SourceExhausted);
}

TEST(ScriptedSourceTest, ReplaysCoordinates) {
  auto src = EntropySource::scripted({2, 4, 2, 3});
  for (unsigned expected : {2u, 4u, 2u, 3u}) {
    EXPECT_EQ(src.next_coordinate(4), expected);
  }
  EXPECT_THROW(src.next_coordinate(4), SourceExhausted);
}

TEST(ScriptedSourceTest, RejectsOutOfRangeEntries) {
  auto coords = EntropySource::scripted({5});
  EXPECT_THROW(coords.next_coordinate(4), InvalidArgument);
  auto zero = EntropySource::scripted({0});
  EXPECT_THROW(zero.next_coordinate(4), InvalidArgument);
  auto bits = EntropySource::scripted({2});
  EXPECT_THROW(bits.next_bit(), InvalidArgument);
}

TEST(ScriptedSourceTest, Cycles) {
  auto src = EntropySource::scripted({1, 2}, true);
  for (int round = 0; round < 3; ++round) {
    EXPECT_EQ(src.next_coordinate(2), 1u);
    EXPECT_EQ(src.next_coordinate(2), 2u);
  }
  EXPECT_THROW(EntropySource::scripted({}, true), InvalidArgument);
}

TEST(ParseTest, Seeds) {
  EXPECT_EQ(parse_seed("42"), 42u);
  EXPECT_EQ(parse_seed("0x2A"), 42u);
  EXPECT_EQ(parse_seed("0XfF"), 255u);
  EXPECT_EQ(parse_seed("18446744073709551615"), UINT64_MAX);
  EXPECT_THROW(parse_seed(""), InvalidArgument);
  EXPECT_THROW(parse_seed("0x"), InvalidArgument);
  EXPECT_THROW(parse_seed("12a"), InvalidArgument);
  EXPECT_THROW(parse_seed("18446744073709551616"), InvalidArgument);
  EXPECT_THROW(parse_seed("-1"), InvalidArgument);
}

TEST(ParseTest, Scripts) {
  EXPECT_EQ(parse_script("2,4,2,3"), (std::vector<std::uint32_t>{2, 4, 2, 3}));
  EXPECT_EQ(parse_script(" 1 , 0 "), (std::vector<std::uint32_t>{1, 0}));
  EXPECT_THROW(parse_script(""), InvalidArgument);
  EXPECT_THROW(parse_script("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_script("1,x"), InvalidArgument);
}

}  // namespace
}  // namespace cirng
