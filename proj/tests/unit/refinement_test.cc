/*******************************************************************************
 * @file:   refinement_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include "shmpart/eval/generators.h"
#include "shmpart/refinement/lp_refinement.h"
#include "shmpart/refinement/rebalance.h"
#include "test_graphs.h"

namespace shmpart {
namespace {

std::vector<BlockID> random_assignment(const NodeID n, const BlockID k, const std::uint64_t seed) {
  Random rng(seed);
  std::vector<BlockID> assignment(n);
  for (NodeID v = 0; v < n; ++v) {
    assignment[v] = static_cast<BlockID>(v % k);
  }
  std::shuffle(assignment.begin(), assignment.end(), rng);
  return assignment;
}

TEST(LpRefinementTest, FixesMisplacedVertices) {
  const Graph g = testing::two_triangles();
  Partition p(g, 2, 0.5, {0, 0, 1, 1, 1, 0});
  const EdgeWeight before = p.cut();
  const EdgeWeight reduction = lp_refine(g, p, 5, 1, 0);
  EXPECT_EQ(reduction, before - p.cut());
  EXPECT_EQ(p.cut(), 1);
  EXPECT_TRUE(p.balanced());
}

TEST(LpRefinementTest, NoMoveWhenOptimal) {
  const Graph g = testing::two_triangles();
  Partition p(g, 2, 0.03, {0, 0, 0, 1, 1, 1});
  EXPECT_EQ(lp_refine(g, p, 5, 1, 0), 0);
  EXPECT_EQ(p.cut(), 1);
}

TEST(LpRefinementTest, SequentialMonotoneAndBalanced) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testing::random_weighted_graph(400, 0.02, 5, 1, seed);
    const BlockID k = 2 + seed % 7;
    Partition p(g, k, 0.03, random_assignment(g.n(), k, seed));
    ASSERT_TRUE(p.balanced());
    const EdgeWeight before = p.cut();
    LpRefinementStats stats;
    WorkerPool pool(1);
    const EdgeWeight reduction = lp_refine(g, p, 10, pool, seed, &stats);
    EXPECT_GE(reduction, 0);
    EXPECT_EQ(before - reduction, p.cut());
    const PartitionReport report = validate_partition(g, p);
    EXPECT_TRUE(report.balanced);
    EXPECT_EQ(report.cut, p.cut());
  }
}

TEST(LpRefinementTest, ParallelNeverIncreasesCut) {
  WorkerPool pool(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = eval::gen_rgg(3000, seed);
    Partition p(g, 8, 0.03, random_assignment(g.n(), 8, seed));
    const EdgeWeight before = p.cut();
    lp_refine(g, p, 10, pool, seed);
    EXPECT_LE(p.cut(), before);
    const PartitionReport report = validate_partition(g, p);
    EXPECT_TRUE(report.balanced);
    EXPECT_EQ(report.cut, p.cut());
  }
}

TEST(RebalanceTest, RestoresBalance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testing::random_connected_graph(500, 0.01, seed);
    const BlockID k = 2 + seed % 5;
    std::vector<BlockID> assignment(g.n(), 0);
    Random rng(seed);
    for (auto &b : assignment) {
      b = random_below(rng, 3) == 0 ? static_cast<BlockID>(random_below(rng, k)) : 0;
    }
    Partition p(g, k, 0.03, assignment);
    ASSERT_FALSE(p.balanced());
    EXPECT_TRUE(rebalance(g, p));
    const PartitionReport report = validate_partition(g, p);
    EXPECT_TRUE(report.balanced);
    EXPECT_EQ(report.cut, p.cut());
  }
}

TEST(RebalanceTest, BalancedPartitionUnchanged) {
  const Graph g = testing::two_triangles();
  Partition p(g, 2, 0.03, {0, 0, 0, 1, 1, 1});
  EXPECT_TRUE(rebalance(g, p));
  EXPECT_EQ(p.cut(), 1);
  EXPECT_EQ(p.block_weight(0), 3);
}

TEST(RebalanceTest, PrefersConnectedTarget) {
  // P4 all in block 0 with bound 2; moving an end vertex cuts one edge.
  const Graph g = testing::path_graph(4);
  Partition p(g, 2, 0.0, {0, 0, 0, 0});
  EXPECT_TRUE(rebalance(g, p));
  EXPECT_TRUE(p.balanced());
  EXPECT_LE(p.cut(), 2);
}

} // namespace
} // namespace shmpart
