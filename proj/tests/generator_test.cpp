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

#include "cirng/generator.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "cirng/errors.hpp"
#include "cirng/graph.hpp"
#include "oracles/oracles.hpp"

namespace cirng {
namespace {

using Images = std::vector<State>;

const Images kExampleImages = {14, 14, 12, 12, 10, 10, 9, 9,
                               6,  6,  4,  4,  2,  2,  1, 0};
const std::vector<std::uint32_t> kExampleBits = {0, 1, 0};
const std::vector<std::uint32_t> kExampleStrategy = {2, 4, 2, 3, 4, 1, 1,
                                                     4, 4, 3, 2, 3, 3};

Generator example_generator() {
  GeneratorConfig config{VectorOfImages(4, kExampleImages), 4, 0b0100,
                         KMode::compat};
  return Generator(std::move(config), EntropySource::scripted(kExampleBits),
                   EntropySource::scripted(kExampleStrategy));
}

TEST(GeneratorTest, PublishedExampleRounds) {
  auto gen = example_generator();
  RoundTrace trace;
  EXPECT_EQ(gen.round(trace), 6u);
  EXPECT_EQ(trace.m, 4u);
  EXPECT_EQ(trace.states, (Images{0, 0, 4, 6}));
  EXPECT_EQ(gen.round(trace), 7u);
  EXPECT_EQ(trace.m, 5u);
  EXPECT_EQ(trace.states, (Images{7, 15, 7, 7, 7}));
  EXPECT_EQ(gen.round(trace), 1u);
  EXPECT_EQ(trace.states, (Images{5, 1, 3, 1}));
  EXPECT_EQ(gen.rounds_emitted(), 3u);
  EXPECT_THROW(gen.round(), SourceExhausted);
}

TEST(GeneratorTest, PublishedExampleBitStream) {
  auto with_seed = example_generator();
  EXPECT_EQ(to_bit_string(with_seed.bit_stream(3, true)), "0100011001110001");
  auto without_seed = example_generator();
  EXPECT_EQ(to_bit_string(without_seed.bit_stream(3, false)), "011001110001");
}

TEST(GeneratorTest, PublishedExampleFirstByte) {
  auto gen = example_generator();
  EXPECT_EQ(gen.byte_stream(1), (std::vector<std::uint8_t>{0x67}));
  EXPECT_EQ(gen.rounds_emitted(), 2u);
}

TEST(GeneratorTest, IdentityKeepsTheSeed) {
  GeneratorConfig config{identity(4), 13, 0b1011};
  Generator gen(config, EntropySource::xorshift(1), EntropySource::xorshift(2));
  EXPECT_EQ(to_bit_string(gen.bit_stream(1)), "1011");
  for (int r = 0; r < 10; ++r) EXPECT_EQ(gen.round(), 0b1011u);
}

TEST(GeneratorTest, ByteStreamLengthAndRounds) {
  for (unsigned n : {2u, 3u, 4u, 5u, 7u, 8u}) {
    GeneratorConfig config{negation(n), 3 * n + 1, 0};
    Generator gen(config, EntropySource::xorshift(11),
                  EntropySource::xorshift(12));
    for (std::size_t bytes : {1u, 3u, 10u}) {
      const std::uint64_t before = gen.rounds_emitted();
      EXPECT_EQ(gen.byte_stream(bytes).size(), bytes);
      EXPECT_EQ(gen.rounds_emitted() - before, (8 * bytes + n - 1) / n);
    }
  }
}

TEST(GeneratorTest, ByteStreamPacksBitStream) {
  GeneratorConfig config{negation(5), 16, 3};
  Generator a(config, EntropySource::xorshift(5), EntropySource::xorshift(6));
  Generator b(config, EntropySource::xorshift(5), EntropySource::xorshift(6));
  const auto bytes = a.byte_stream(5);  // 40 bits = 8 rounds of 5
  EXPECT_EQ(bytes, pack_bits(b.bit_stream(8)));
}

TEST(GeneratorTest, ReplayDeterminism) {
  GeneratorConfig config{VectorOfImages(4, oracle::published_vectors()[2]), 13, 9};
  Generator a(config, EntropySource::xorshift(77), EntropySource::xorshift(78));
  Generator b(config, EntropySource::xorshift(77), EntropySource::xorshift(78));
  EXPECT_EQ(a.byte_stream(4096), b.byte_stream(4096));
}

TEST(GeneratorTest, ConfigValidation) {
  auto make = [](unsigned k, State seed, KMode mode) {
    GeneratorConfig config{negation(4), k, seed, mode};
    return Generator(config, EntropySource::xorshift(1),
                     EntropySource::xorshift(2));
  };
  EXPECT_THROW(make(12, 0, KMode::strict), InvalidArgument);
  EXPECT_NO_THROW(make(13, 0, KMode::strict));
  EXPECT_NO_THROW(make(4, 0, KMode::compat));
  EXPECT_THROW(make(0, 0, KMode::compat), InvalidArgument);
  EXPECT_THROW(make(13, 16, KMode::strict), InvalidArgument);
  EXPECT_EQ(GeneratorConfig::min_strict_k(4), 13u);
  auto gen = make(13, 0, KMode::strict);
  EXPECT_THROW(gen.bit_stream(0), InvalidArgument);
  EXPECT_THROW(gen.byte_stream(0), InvalidArgument);
}

TEST(GeneratorTest, EveryUpdateChangesAtMostOneCoordinate) {
  std::mt19937 rng(9);
  for (unsigned n = 2; n <= 6; ++n) {
    Images images(std::size_t{1} << n);
    for (auto& v : images) v = rng() % images.size();
    GeneratorConfig config{VectorOfImages(n, images), 3 * n + 1, 0};
    Generator gen(config, EntropySource::xorshift(3), EntropySource::xorshift(4));
    State prev = gen.state();
    RoundTrace trace;
    for (int r = 0; r < 200; ++r) {
      gen.round(trace);
      for (std::size_t s = 0; s < trace.states.size(); ++s) {
        const State d = trace.states[s] ^ prev;
        ASSERT_TRUE(d == 0 || d == coordinate_mask(n, trace.coordinates[s]));
        prev = trace.states[s];
      }
    }
  }
}

TEST(GeneratorTest, MatchesStepInterpreter) {
  std::mt19937 rng(31337);
  for (int run = 0; run < 500; ++run) {
    const unsigned n = 2 + rng() % 3;
    Images images(std::size_t{1} << n);
    for (auto& v : images) v = rng() % images.size();
    const unsigned k = 1 + rng() % 31;
    const unsigned bit = rng() % 2;
    std::vector<std::uint32_t> strategy(k + bit);
    for (auto& s : strategy) s = 1 + rng() % n;
    const State x0 = rng() % images.size();

    GeneratorConfig config{VectorOfImages(n, images), k, x0, KMode::compat};
    Generator gen(config, EntropySource::scripted({bit}),
                  EntropySource::scripted(strategy));
    RoundTrace trace;
    const State out = gen.round(trace);
    const auto expected = oracle::ci_run(
        images, n, x0, std::vector<unsigned>(strategy.begin(), strategy.end()));
    ASSERT_EQ(trace.states, expected);
    ASSERT_EQ(out, expected.back());
  }
}

// For a strongly connected f every state is reachable from every seed. The
// oracle finds a label path by breadth-first search; scripting that path
// into the generator must land on the target.
TEST(GeneratorTest, ReachesEveryStateWhenStronglyConnected) {
  std::vector<VectorOfImages> functions = {negation(2), negation(3),
                                           negation(4)};
  for (const auto& images : oracle::published_vectors()) {
    functions.emplace_back(4, images);
  }
  for (const auto& f : functions) {
    const unsigned n = f.n_bits();
    const Images images(f.images().begin(), f.images().end());
    ASSERT_TRUE(oracle::strongly_connected(images, n));
    for (State seed = 0; seed < f.size(); ++seed) {
      // Parent labels of a BFS tree rooted at the seed.
      std::vector<std::pair<State, unsigned>> parent(f.size(), {0, 0});
      std::vector<bool> seen(f.size(), false);
      std::deque<State> queue{seed};
      seen[seed] = true;
      while (!queue.empty()) {
        const State v = queue.front();
        queue.pop_front();
        for (unsigned s = 1; s <= n; ++s) {
          const State w = oracle::ci_step(images, n, v, s);
          if (!seen[w]) {
            seen[w] = true;
            parent[w] = {v, s};
            queue.push_back(w);
          }
        }
      }
      for (State target = 0; target < f.size(); ++target) {
        if (target == seed) continue;
        std::vector<std::uint32_t> path;
        for (State v = target; v != seed; v = parent[v].first) {
          path.insert(path.begin(), parent[v].second);
        }
        ASSERT_LT(path.size(), f.size());
        GeneratorConfig config{f, static_cast<unsigned>(path.size()), seed,
                               KMode::compat};
        Generator gen(config, EntropySource::scripted({0}),
                      EntropySource::scripted(path));
        ASSERT_EQ(gen.round(), target);
      }
    }
  }
}

}  // namespace
}  // namespace cirng
