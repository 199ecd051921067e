// Copyright 2026 The Rainbow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/genlab.hpp"
#include "rainbow/partition.hpp"

namespace rainbow {
namespace {

const Graph kC4 = gen_cycle(4);

TEST(EdgeColoring, AcceptsSurjectiveOneBased) {
  const EdgeColoring c({2, 1, 2, 3});
  EXPECT_EQ(c.num_colors(), 3);
  EXPECT_EQ(c[2], 2);
  EXPECT_EQ(c.size(), 4);
}

TEST(EdgeColoring, RejectsZeroAndGaps) {
  EXPECT_THROW(EdgeColoring({0, 1}), Error);
  EXPECT_THROW(EdgeColoring({1, 3}), Error);
  try {
    EdgeColoring({1, 3});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_coloring);
  }
}

TEST(EdgeColoring, CompactedKeepsRelativeOrder) {
  const std::vector<int> raw{7, 3, 7, 10};
  EXPECT_EQ(EdgeColoring::compacted(raw).colors(), (std::vector<int>{2, 1, 2, 3}));
}

TEST(Verifier, SquareAlternating) {
  EXPECT_TRUE(is_rainbow_connected(kC4, EdgeColoring({1, 2, 1, 2})));
}

TEST(Verifier, SquareBlockedReportsWitness) {
  // Edges 0-1, 1-2 colored 1 and 2-3, 0-3 colored 2: 0 and 2 are only joined
  // by the paths 0-1-2 (1,1) and 0-3-2 (2,2).
  const auto v = is_rainbow_connected(kC4, EdgeColoring({1, 1, 2, 2}));
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, (std::pair<Vertex, Vertex>{0, 2}));
}

TEST(Verifier, DistinctColorsAlwaysConnect) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, std::min(n * (n - 1) / 2, 30))(rng);
    const Graph g = gen_random_connected(rng(), n, m);
    std::vector<int> c(static_cast<std::size_t>(m));
    std::iota(c.begin(), c.end(), 1);
    std::shuffle(c.begin(), c.end(), rng);
    ASSERT_TRUE(is_rainbow_connected(g, EdgeColoring(c))) << describe(g);
  }
}

TEST(Verifier, LengthAndWidthChecked) {
  try {
    is_rainbow_connected(kC4, EdgeColoring({1, 2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::coloring_length_mismatch);
  }
  const Graph big = gen_path(66);
  std::vector<int> c(65);
  std::iota(c.begin(), c.end(), 1);
  try {
    is_rainbow_connected(big, EdgeColoring(c));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::width_exceeded);
  }
}

TEST(Verifier, DisconnectedGraphFails) {
  const auto v = is_rainbow_connected(Graph(3, {{0, 1}}), EdgeColoring({1}));
  EXPECT_FALSE(v);
  EXPECT_EQ(*v.witness, (std::pair<Vertex, Vertex>{0, 2}));
}

TEST(Verifier, AgreesWithPathEnumerationOnSmallGraphs) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      for (int trial = 0; trial < 40; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, g.size())(rng);
        std::vector<int> raw(static_cast<std::size_t>(g.size()));
        for (int& x : raw) x = std::uniform_int_distribution<int>(1, k)(rng);
        const auto c = EdgeColoring::compacted(raw);
        ASSERT_EQ(static_cast<bool>(is_rainbow_connected(g, c)), oracle::rainbow_connected(g, raw))
            << describe(g);
      }
    }
  }
}

TEST(Verifier, ManyCyclesUseStateSearch) {
  const Graph k5 = gen_complete(5);
  EXPECT_TRUE(is_rainbow_connected(k5, EdgeColoring(std::vector<int>(10, 1))));
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_FALSE(is_rainbow_connected(petersen, EdgeColoring::compacted(std::vector<int>(15, 1))));
}

TEST(Partitions, CountsAreStirlingNumbers) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t count = 0;
      for_each_partition(n, k, [&](std::span<const int>) {
        ++count;
        return false;
      });
      EXPECT_EQ(count, oracle::stirling2(n, k)) << n << " " << k;
    }
  }
}

TEST(Partitions, RestrictedGrowthInLexicographicOrder) {
  std::vector<std::vector<int>> seen;
  for_each_partition(5, 3, [&](std::span<const int> labels) {
    seen.emplace_back(labels.begin(), labels.end());
    return false;
  });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::set<std::vector<int>>(seen.begin(), seen.end()).size(), seen.size());
  for (const auto& s : seen) {
    int top = -1;
    for (int x : s) {
      ASSERT_LE(x, top + 1);
      top = std::max(top, x);
    }
    ASSERT_EQ(top, 2);
  }
  EXPECT_EQ(seen.front(), (std::vector<int>{0, 0, 0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<int>{0, 1, 2, 2, 2}));
}

TEST(Partitions, VisitorCanStopEarly) {
  int visits = 0;
  const bool stopped = for_each_partition(6, 2, [&](std::span<const int>) { return ++visits == 3; });
  EXPECT_TRUE(stopped);
  EXPECT_EQ(visits, 3);
}

TEST(Partitions, AllowVetoesLabels) {
  // Positions 0 and 1 must differ.
  std::uint64_t count = 0;
  for_each_partition(
      5, 2, [](std::span<const int> prefix, int label) { return prefix.size() != 1 || label != prefix[0]; },
      [&](std::span<const int> labels) {
        EXPECT_NE(labels[0], labels[1]);
        ++count;
        return false;
      });
  // Two-class partitions of 5 items with items 0 and 1 apart: 2^3.
  EXPECT_EQ(count, 8u);
}

TEST(Partitions, EmptyAndImpossible) {
  int visits = 0;
  for_each_partition(3, 4, [&](std::span<const int>) { return ++visits, false; });
  EXPECT_EQ(visits, 0);
  for_each_partition(0, 0, [&](std::span<const int>) { return ++visits, false; });
  EXPECT_EQ(visits, 1);
}

}  // namespace
}  // namespace rainbow
