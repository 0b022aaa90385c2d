/*******************************************************************************
 * @file:   partition_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <numeric>

#include "shmpart/partition.h"
#include "test_graphs.h"

namespace shmpart {
namespace {

TEST(LMaxTest, FormulaValues) {
  EXPECT_DOUBLE_EQ(l_max(10, 3, 0.03), 1.03 * 4);
  EXPECT_DOUBLE_EQ(l_max(8, 2, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(l_max(5, 2, 0.03), 1.03 * 3);
  EXPECT_THROW(l_max(5, 0, 0.03), std::invalid_argument);
}

TEST(LMaxTest, IntegerBoundIsFloor) {
  EXPECT_EQ(max_block_weight_bound(10, 3, 0.03), 4);
  EXPECT_EQ(max_block_weight_bound(8, 2, 0.0), 4);
  EXPECT_EQ(max_block_weight_bound(5, 2, 0.03), 3);
  // 1.5 * 2 = 3 must not round down to 2
  EXPECT_EQ(max_block_weight_bound(4, 2, 0.5), 3);
  EXPECT_EQ(max_block_weight_bound(100, 1, 0.1), 110);
}

TEST(LMaxTest, MonotoneInEpsilonAndWeight) {
  double previous = 0.0;
  for (double eps = 0.0; eps < 1.0; eps += 0.01) {
    const double value = l_max(1000, 7, eps);
    EXPECT_GE(value, previous);
    previous = value;
  }
  previous = 0.0;
  for (NodeWeight total = 1; total < 500; ++total) {
    const double value = l_max(total, 7, 0.03);
    EXPECT_GE(value, previous);
    previous = value;
  }
}

TEST(CutTest, Examples) {
  const Graph p4 = testing::path_graph(4);
  EXPECT_EQ(cut_size(p4, std::vector<BlockID>{0, 0, 0, 0}), 0);
  EXPECT_EQ(cut_size(p4, std::vector<BlockID>{0, 0, 1, 1}), 1);
  EXPECT_EQ(cut_size(testing::two_triangles(), std::vector<BlockID>{0, 0, 0, 1, 1, 1}), 1);
}

TEST(CutTest, InvariantUnderBlockPermutation) {
  const Graph g = testing::random_weighted_graph(30, 0.3, 9, 1, 4);
  Random rng(11);
  std::vector<BlockID> assignment(g.n());
  for (auto &b : assignment) {
    b = static_cast<BlockID>(random_below(rng, 4));
  }
  std::vector<BlockID> perm{2, 0, 3, 1};
  std::vector<BlockID> permuted(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    permuted[v] = perm[assignment[v]];
  }
  EXPECT_EQ(cut_size(g, assignment), cut_size(g, permuted));
}

TEST(GainTest, StarCenter) {
  // center 0 in block 0; leaves 1, 2 in block 1 and leaf 3 in block 0
  const Graph star = testing::star_graph(3);
  const Partition p(star, 2, 0.03, {0, 1, 1, 0});
  EXPECT_EQ(gain(star, p, 0), (GainResult{1, 1}));
}

TEST(GainTest, PathAllInOneBlock) {
  const Graph p4 = testing::path_graph(4);
  const Partition p(p4, 2, 0.03, {0, 0, 0, 0});
  EXPECT_EQ(gain(p4, p, 1), (GainResult{1, -2}));
}

TEST(GainTest, BalancedNeighborhoodGivesZero) {
  const Graph p3 = testing::path_graph(3);
  const Partition p(p3, 2, 0.03, {0, 0, 1});
  EXPECT_EQ(gain(p3, p, 1), (GainResult{1, 0}));
}

TEST(GainTest, IsolatedVertex) {
  const Graph g = build_graph(3, {});
  const Partition p(g, 3, 0.03, {1, 0, 2});
  EXPECT_EQ(gain(g, p, 0), (GainResult{0, 0}));
  EXPECT_EQ(gain(g, p, 1), (GainResult{1, 0}));
}

TEST(GainTest, RequiresTwoBlocks) {
  const Graph p4 = testing::path_graph(4);
  const Partition p(p4, 1, 0.03, {0, 0, 0, 0});
  EXPECT_THROW(gain(p4, p, 0), std::invalid_argument);
}

// The reported gain equals the largest cut decrease over all targets; ties
// resolve to the smallest block ID.
TEST(GainTest, MatchesBruteForceOnRandomGraphs) {
  Random rng(99);
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const NodeID n = 2 + static_cast<NodeID>(random_below(rng, 49));
    const BlockID k = 2 + static_cast<BlockID>(random_below(rng, 5));
    const Graph g = testing::random_weighted_graph(n, 0.2, 4, 2, trial);
    std::vector<BlockID> assignment(n);
    for (auto &b : assignment) {
      b = static_cast<BlockID>(random_below(rng, k));
    }
    const Partition p(g, k, 0.5, assignment);
    for (NodeID v = 0; v < n; ++v) {
      const GainResult result = gain(g, p, v);
      const EdgeWeight before = cut_size(g, assignment);
      EdgeWeight best = std::numeric_limits<EdgeWeight>::min();
      BlockID best_block = kInvalidBlockID;
      for (BlockID b = 0; b < k; ++b) {
        if (b == assignment[v]) {
          continue;
        }
        auto moved = assignment;
        moved[v] = b;
        const EdgeWeight decrease = before - cut_size(g, moved);
        if (decrease > best) {
          best = decrease;
          best_block = b;
        }
      }
      ASSERT_EQ(result.value, best) << "trial " << trial << " vertex " << v;
      ASSERT_EQ(result.target, best_block) << "trial " << trial << " vertex " << v;
    }
  }
}

TEST(PartitionTest, IncrementalMovesMatchRecomputation) {
  const Graph g = testing::random_weighted_graph(60, 0.15, 7, 5, 2024);
  const BlockID k = 5;
  Random rng(1);
  std::vector<BlockID> assignment(g.n());
  for (auto &b : assignment) {
    b = static_cast<BlockID>(random_below(rng, k));
  }
  Partition p(g, k, 0.03, assignment);
  for (int step = 0; step < 10000; ++step) {
    const auto v = static_cast<NodeID>(random_below(rng, g.n()));
    const auto to = static_cast<BlockID>(random_below(rng, k));
    p.move(g, v, to);
    assignment[v] = to;
    if (step % 97 == 0 || step == 9999) {
      const PartitionReport report = validate_partition(g, assignment, k, 0.03);
      ASSERT_EQ(p.cut(), report.cut) << "step " << step;
      std::vector<NodeWeight> weights(k, 0);
      for (NodeID u = 0; u < g.n(); ++u) {
        weights[assignment[u]] += g.vertex_weight(u);
      }
      ASSERT_TRUE(std::equal(weights.begin(), weights.end(), p.block_weights().begin()));
      ASSERT_EQ(std::accumulate(weights.begin(), weights.end(), NodeWeight{0}), g.total_vertex_weight());
    }
  }
}

TEST(ValidateTest, Examples) {
  const Graph p4 = testing::path_graph(4);
  const auto split = validate_partition(p4, std::vector<BlockID>{0, 0, 1, 1}, 2, 0.0);
  EXPECT_TRUE(split.balanced);
  EXPECT_EQ(split.cut, 1);
  EXPECT_EQ(split.max_block_weight, 2);

  const auto lopsided = validate_partition(p4, std::vector<BlockID>{0, 1, 1, 1}, 2, 0.0);
  EXPECT_FALSE(lopsided.balanced);
  EXPECT_EQ(lopsided.overloaded_blocks, std::vector<BlockID>{1});

  const auto single = validate_partition(testing::two_triangles(), std::vector<BlockID>(6, 0), 1, 0.0);
  EXPECT_TRUE(single.balanced);
  EXPECT_EQ(single.cut, 0);
}

TEST(ValidateTest, RejectsOutOfRangeBlocks) {
  const Graph p4 = testing::path_graph(4);
  EXPECT_THROW(validate_partition(p4, std::vector<BlockID>{0, 0, 2, 1}, 2, 0.0), std::invalid_argument);
  EXPECT_THROW(validate_partition(p4, std::vector<BlockID>{0, 0, 1}, 2, 0.0), std::invalid_argument);
}

TEST(PartitionTest, AdoptKeepsBookkeeping) {
  const Partition p = Partition::adopt(2, 0.03, 6, {0, 0, 0, 1, 1, 1}, {3, 3}, 1);
  EXPECT_EQ(p.cut(), 1);
  EXPECT_EQ(p.block_weight(1), 3);
  EXPECT_TRUE(p.balanced());
}

} // namespace
} // namespace shmpart
