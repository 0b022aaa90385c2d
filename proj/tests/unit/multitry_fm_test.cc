/*******************************************************************************
 * @file:   multitry_fm_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <cmath>

#include "shmpart/eval/generators.h"
#include "shmpart/refinement/lp_refinement.h"
#include "shmpart/refinement/multitry_fm.h"
#include "test_graphs.h"

namespace shmpart {
namespace {

std::vector<BlockID> round_robin(const NodeID n, const BlockID k, const std::uint64_t seed) {
  std::vector<BlockID> assignment(n);
  for (NodeID v = 0; v < n; ++v) {
    assignment[v] = static_cast<BlockID>(v % k);
  }
  Random rng(seed);
  std::shuffle(assignment.begin(), assignment.end(), rng);
  return assignment;
}

TEST(StoppingRuleTest, Examples) {
  StoppingStats stats;
  stats.mean = -2.0;
  stats.variance = 1.0;
  stats.alpha = 3.0;
  stats.beta = 5.0;
  stats.steps = 2;
  EXPECT_FALSE(should_stop(stats));
  stats.steps = 3;
  EXPECT_TRUE(should_stop(stats));
  stats.steps = 0;
  EXPECT_FALSE(should_stop(stats));
}

TEST(StoppingRuleTest, RunningMoments) {
  StoppingStats stats;
  for (const EdgeWeight gain : {-1, -3, -2, -6}) {
    stats.record(gain);
  }
  EXPECT_EQ(stats.steps, 4u);
  EXPECT_DOUBLE_EQ(stats.mean, -3.0);
  // population variance of {-1, -3, -2, -6}
  EXPECT_DOUBLE_EQ(stats.variance, 3.5);
  stats.reset();
  EXPECT_EQ(stats.steps, 0u);
  EXPECT_EQ(stats.mean, 0.0);
}

TEST(MoveMarksTest, TestAndSet) {
  MoveMarks marks(10);
  EXPECT_TRUE(marks.try_mark(4));
  EXPECT_FALSE(marks.try_mark(4));
  EXPECT_TRUE(marks.marked(4));
  marks.clear();
  EXPECT_FALSE(marks.marked(4));
}

TEST(MoveMarksTest, ConcurrentClaimsAreExclusive) {
  const NodeID n = 10000;
  MoveMarks marks(n);
  WorkerPool pool(8);
  std::vector<std::vector<NodeID>> claimed(pool.size());
  pool.run([&](const std::size_t worker) {
    for (NodeID v = 0; v < n; ++v) {
      if (marks.try_mark(v)) {
        claimed[worker].push_back(v);
      }
    }
  });
  std::size_t total = 0;
  for (const auto &list : claimed) {
    total += list.size();
  }
  EXPECT_EQ(total, n);
}

TEST(LocalSearchViewTest, OverlayLeavesPartitionUntouched) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.5, {0, 0, 1, 1, 1, 1});
  LocalSearchView view(g, p, 1);
  const auto best = view.best_move(2, p.bound());
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->first, 0u);
  EXPECT_EQ(best->second, 1);
  view.apply(Move{2, 1, 0, best->second});
  EXPECT_EQ(view.block(2), 0u);
  EXPECT_EQ(view.block_weight(0), 3);
  EXPECT_EQ(p.block(2), 1u);
  view.undo(Move{2, 1, 0, best->second});
  EXPECT_EQ(view.block(2), 1u);
  EXPECT_EQ(view.block_weight(0), 2);
}

TEST(LocalSearchViewTest, InfeasibleTargetsSkipped) {
  const Graph g = testing::path_graph(4);
  const Partition p(g, 2, 0.0, {0, 1, 0, 1});
  LocalSearchView view(g, p, 1);
  EXPECT_FALSE(view.best_move(0, p.bound()).has_value());
}

TEST(LocalSearchViewTest, LazyQueueReturnsCurrentGains) {
  const Graph g = testing::path_graph(4);
  const Partition p(g, 2, 0.5, {0, 0, 1, 1});
  LocalSearchView view(g, p, 1);
  view.pq_update(0, 1);
  view.pq_update(1, 5);
  view.pq_update(1, -2);
  const auto first = view.pq_pop();
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, (std::pair<NodeID, EdgeWeight>{0, 1}));
  const auto second = view.pq_pop();
  ASSERT_TRUE(second.has_value());
  EXPECT_EQ(*second, (std::pair<NodeID, EdgeWeight>{1, -2}));
  EXPECT_FALSE(view.pq_pop().has_value());
}

TEST(PerformMovesTest, FindsImprovingSwapWithSlack) {
  const Graph g = testing::two_triangles();
  const Partition p(g, 2, 0.5, {0, 0, 1, 1, 1, 0});
  LocalSearchView view(g, p, 3);
  MoveMarks marks(g.n());
  const MoveSequence sequence = perform_moves(view, 5, marks, p.bound(), 3.0, std::log(6.0));
  ASSERT_FALSE(sequence.moves.empty());
  EdgeWeight gain = 0;
  for (const Move &move : sequence.moves) {
    gain += move.gain;
    EXPECT_TRUE(marks.marked(move.vertex));
  }
  EXPECT_GT(gain, 0);
}

// The returned prefix replays to the cut the gains predict, every move is
// feasible in sequence and every moved vertex carries a mark.
TEST(PerformMovesTest, ReturnedMovesReplayExactly) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::random_weighted_graph(80, 0.06, 5, 2, seed);
    const BlockID k = 2 + seed % 4;
    Partition p(g, k, 0.1, round_robin(g.n(), k, seed));
    if (!p.balanced()) {
      continue;
    }
    LocalSearchView view(g, p, seed);
    MoveMarks marks(g.n());
    Random rng(seed);
    const auto start = static_cast<NodeID>(random_below(rng, g.n()));
    const MoveSequence sequence = perform_moves(view, start, marks, p.bound(), 3.0, std::log(80.0));
    EXPECT_EQ(sequence.claimed_best_prefix, sequence.moves.size());

    Partition replay = p;
    EdgeWeight predicted = 0;
    for (const Move &move : sequence.moves) {
      ASSERT_TRUE(marks.marked(move.vertex));
      ASSERT_EQ(replay.block(move.vertex), move.from);
      ASSERT_LE(replay.block_weight(move.to) + g.vertex_weight(move.vertex), replay.bound());
      replay.move(g, move.vertex, move.to);
      predicted += move.gain;
    }
    EXPECT_EQ(p.cut() - replay.cut(), predicted);
    EXPECT_GE(predicted, 0);
    for (NodeID v = 0; v < g.n(); ++v) {
      ASSERT_EQ(view.block(v), replay.block(v));
    }
  }
}

struct PrefixOracle {
  Partition partition;
  EdgeWeight gain;
};

PrefixOracle oracle_apply(const Graph &graph, Partition partition, std::span<const MoveSequence> sequences) {
  const EdgeWeight initial = partition.cut();
  for (const MoveSequence &sequence : sequences) {
    std::vector<EdgeWeight> cuts{partition.cut()};
    Partition trial = partition;
    for (const Move &move : sequence.moves) {
      if (trial.block_weight(move.to) + graph.vertex_weight(move.vertex) > trial.bound()) {
        break;
      }
      trial.move(graph, move.vertex, move.to);
      cuts.push_back(trial.cut());
    }
    const std::size_t best = std::min_element(cuts.begin(), cuts.end()) - cuts.begin();
    for (std::size_t i = 0; i < best; ++i) {
      partition.move(graph, sequence.moves[i].vertex, sequence.moves[i].to);
    }
  }
  const EdgeWeight gain = initial - partition.cut();
  return {std::move(partition), gain};
}

TEST(ApplyMovesTest, MatchesPrefixOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = testing::random_weighted_graph(40, 0.15, 4, 3, seed);
    const BlockID k = 2 + seed % 3;
    const Partition start(g, k, 0.2, round_robin(g.n(), k, seed));
    Random rng(seed);

    // disjoint vertex sets per sequence, from-blocks consistent with a
    // sequential replay of everything
    std::vector<NodeID> vertices(g.n());
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    std::vector<MoveSequence> sequences(1 + random_below(rng, 4));
    std::size_t next = 0;
    for (auto &sequence : sequences) {
      const std::size_t length = random_below(rng, 8);
      for (std::size_t i = 0; i < length && next < vertices.size(); ++i) {
        const NodeID v = vertices[next++];
        const BlockID from = start.block(v);
        const auto to = static_cast<BlockID>((from + 1 + random_below(rng, k - 1)) % k);
        sequence.moves.push_back(Move{v, from, to, 0});
      }
    }

    Partition actual = start;
    const ApplyResult result = apply_moves(g, actual, sequences);
    const PrefixOracle expected = oracle_apply(g, start, sequences);
    ASSERT_EQ(result.gain, expected.gain) << "seed " << seed;
    ASSERT_TRUE(std::equal(
        actual.assignment().begin(), actual.assignment().end(), expected.partition.assignment().begin()
    ));
    EXPECT_GE(result.gain, 0);
    EXPECT_EQ(validate_partition(g, actual).cut, actual.cut());
  }
}

TEST(ApplyMovesTest, RejectsDuplicateVertices) {
  const Graph g = testing::path_graph(4);
  Partition p(g, 2, 0.5, {0, 0, 1, 1});
  std::vector<MoveSequence> sequences(2);
  sequences[0].moves.push_back(Move{1, 0, 1, 0});
  sequences[1].moves.push_back(Move{1, 0, 1, 0});
  EXPECT_THROW(apply_moves(g, p, sequences), std::logic_error);
}

TEST(ApplyMovesTest, RejectsStaleSourceBlock) {
  const Graph g = testing::path_graph(4);
  Partition p(g, 2, 0.5, {0, 0, 1, 1});
  std::vector<MoveSequence> sequences(1);
  sequences[0].moves.push_back(Move{2, 0, 1, 0});
  EXPECT_THROW(apply_moves(g, p, sequences), std::logic_error);
}

TEST(ApplyMovesTest, OverloadEndsSequence) {
  const Graph g = testing::path_graph(4);
  Partition p(g, 2, 0.0, {0, 1, 0, 1});
  std::vector<MoveSequence> sequences(1);
  sequences[0].moves = {Move{0, 0, 1, 1}, Move{1, 1, 0, 1}};
  const ApplyResult result = apply_moves(g, p, sequences);
  EXPECT_EQ(result.gain, 0);
  EXPECT_TRUE(result.moved.empty());
  EXPECT_EQ(p.cut(), 3);
}

TEST(MlsTest, ImprovesAndStaysBalanced) {
  for (const std::size_t workers : {1, 4, 8}) {
    WorkerPool pool(workers);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = eval::gen_rgg(2000, seed);
      const BlockID k = 2 + seed % 7;
      Partition p(g, k, 0.03, round_robin(g.n(), k, seed));
      lp_refine(g, p, 3, 1, seed);
      ASSERT_TRUE(p.balanced());
      const EdgeWeight before = p.cut();
      MlsStats stats;
      const EdgeWeight gain = mls(g, p, MlsConfig{}, pool, seed, &stats);
      EXPECT_EQ(before - gain, p.cut());
      EXPECT_GE(gain, 0);
      EdgeWeight previous = before;
      for (std::size_t i = 0; i < stats.cut_after_apply.size(); ++i) {
        EXPECT_LE(stats.cut_after_apply[i], previous);
        EXPECT_TRUE(stats.balanced_after_apply[i]);
        previous = stats.cut_after_apply[i];
      }
      const PartitionReport report = validate_partition(g, p);
      EXPECT_TRUE(report.balanced);
      EXPECT_EQ(report.cut, p.cut());
    }
  }
}

TEST(MlsTest, DeterministicWithOneWorker) {
  const Graph g = eval::gen_rgg(3000, 5);
  Partition a(g, 4, 0.03, round_robin(g.n(), 4, 5));
  Partition b = a;
  mls(g, a, MlsConfig{}, 1, 11);
  mls(g, b, MlsConfig{}, 1, 11);
  EXPECT_TRUE(std::equal(a.assignment().begin(), a.assignment().end(), b.assignment().begin()));
}

} // namespace
} // namespace shmpart
