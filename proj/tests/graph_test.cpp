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

#include "cirng/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "cirng/errors.hpp"
#include "oracles/oracles.hpp"

namespace cirng {
namespace {

using Images = std::vector<State>;

TEST(BuildGraphTest, NegationTwoBits) {
  const auto g = build_graph(negation(2));
  EXPECT_EQ(g.target(0, 1), 2u);
  EXPECT_EQ(g.target(0, 2), 1u);
  EXPECT_EQ(g.arc_count(), 8u);
}

TEST(BuildGraphTest, NegationFourBitsFirstArc) {
  EXPECT_EQ(build_graph(negation(4)).target(0, 1), 8u);
}

TEST(BuildGraphTest, IdentityHasOnlySelfLoops) {
  const auto g = build_graph(identity(4));
  for (State x = 0; x < 16; ++x) {
    for (unsigned i = 1; i <= 4; ++i) EXPECT_EQ(g.target(x, i), x);
  }
}

TEST(BuildGraphTest, ArcsDifferInTheirLabelOnly) {
  std::mt19937 rng(1);
  for (unsigned n = 2; n <= 8; ++n) {
    Images images(std::size_t{1} << n);
    for (auto& v : images) v = rng() % images.size();
    const auto g = build_graph(VectorOfImages(n, images));
    EXPECT_EQ(g.arc_count(), n * images.size());
    for (State x = 0; x < images.size(); ++x) {
      for (unsigned i = 1; i <= n; ++i) {
        const State d = g.target(x, i) ^ x;
        ASSERT_TRUE(d == 0 || d == coordinate_mask(n, i));
      }
    }
  }
}

TEST(BuildGraphTest, RespectsGraphLimit) {
  EXPECT_THROW(build_graph(negation(13)), ResourceLimit);
  Limits wide;
  wide.max_graph_bits = 13;
  EXPECT_NO_THROW(build_graph(negation(13), wide));
}

TEST(StrongConnectivityTest, NegationIsStronglyConnected) {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto v = is_strongly_connected(build_graph(negation(n)));
    EXPECT_TRUE(v.strongly_connected) << n;
    EXPECT_EQ(v.scc_count, 1u);
    EXPECT_FALSE(v.witness);
  }
}

TEST(StrongConnectivityTest, IdentityIsFullySplit) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto v = is_strongly_connected(build_graph(identity(n)));
    EXPECT_FALSE(v.strongly_connected);
    EXPECT_EQ(v.scc_count, std::size_t{1} << n);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->first, 0u);
  }
}

TEST(StrongConnectivityTest, PublishedVectorsAreChaotic) {
  for (const auto& images : oracle::published_vectors()) {
    EXPECT_TRUE(
        is_strongly_connected(build_graph(VectorOfImages(4, images)))
            .strongly_connected);
  }
}

TEST(StrongConnectivityTest, AgreesWithReachabilityOracle) {
  std::mt19937 rng(2024);
  ConnectivityChecker checker;
  for (unsigned n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      Images images(std::size_t{1} << n);
      for (auto& v : images) v = rng() % images.size();
      const VectorOfImages f(n, images);
      const auto g = build_graph(f);
      const auto verdict = is_strongly_connected(g);
      const bool expected = oracle::strongly_connected(images, n);
      ASSERT_EQ(verdict.strongly_connected, expected);
      ASSERT_EQ(checker.strongly_connected(images, n), expected);
      ASSERT_EQ(verdict.scc_count, oracle::component_count(images, n));

      const auto ids = strongly_connected_components(g);
      const auto same = oracle::same_component(images, n);
      for (State u = 0; u < images.size(); ++u) {
        for (State v = 0; v < images.size(); ++v) {
          ASSERT_EQ(ids[u] == ids[v], same[u][v]);
        }
      }
      if (verdict.witness) {
        const auto reach = oracle::reachability(images, n);
        ASSERT_FALSE(reach[verdict.witness->first][verdict.witness->second]);
      }
    }
  }
}

TEST(StrongConnectivityTest, CheckerHandlesWideGraphs) {
  ConnectivityChecker checker;
  const auto neg = negation(9);
  EXPECT_TRUE(checker.strongly_connected(neg.images(), 9));
  const auto id = identity(9);
  EXPECT_FALSE(checker.strongly_connected(id.images(), 9));
}

// XOR-relabelling the negation's graph by a constant c maps it onto the
// graph of x -> f(x ^ c) ^ c, which is again the negation: connectivity is
// unchanged and so is the arc structure.
TEST(StrongConnectivityTest, NegationInvariantUnderXorRelabelling) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto neg = negation(n);
    const auto g = build_graph(neg);
    for (State c = 0; c < neg.size(); ++c) {
      Images relabelled(neg.size());
      for (State x = 0; x < neg.size(); ++x) relabelled[x] = neg[x ^ c] ^ c;
      const auto h = build_graph(VectorOfImages(n, relabelled));
      EXPECT_TRUE(is_strongly_connected(h).strongly_connected);
      for (State x = 0; x < neg.size(); ++x) {
        for (unsigned i = 1; i <= n; ++i) {
          ASSERT_EQ(h.target(x ^ c, i), g.target(x, i) ^ c);
        }
      }
    }
  }
}

TEST(ExportDotTest, NegationTwoBits) {
  const std::string dot = export_dot(build_graph(negation(2)));
  EXPECT_EQ(dot,
            "digraph iteration_graph {\n"
            "  \"00\";\n  \"01\";\n  \"10\";\n  \"11\";\n"
            "  \"00\" -> \"10\" [label=\"1\"];\n"
            "  \"00\" -> \"01\" [label=\"2\"];\n"
            "  \"01\" -> \"11\" [label=\"1\"];\n"
            "  \"01\" -> \"00\" [label=\"2\"];\n"
            "  \"10\" -> \"00\" [label=\"1\"];\n"
            "  \"10\" -> \"11\" [label=\"2\"];\n"
            "  \"11\" -> \"01\" [label=\"1\"];\n"
            "  \"11\" -> \"10\" [label=\"2\"];\n"
            "}\n");
  EXPECT_EQ(dot, export_dot(build_graph(negation(2))));
}

TEST(ExportDotTest, IdentityArcsAreSelfLoops) {
  std::istringstream in(export_dot(build_graph(identity(2))));
  std::string line;
  int arcs = 0;
  while (std::getline(in, line)) {
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) continue;
    ++arcs;
    const std::string tail = line.substr(2, arrow - 2);
    const std::string head = line.substr(arrow + 4, tail.size());
    EXPECT_EQ(tail, head);
  }
  EXPECT_EQ(arcs, 8);
}

}  // namespace
}  // namespace cirng
