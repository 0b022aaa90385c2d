/*******************************************************************************
 * @file:   rebalance.cc
 ******************************************************************************/
#include "shmpart/refinement/rebalance.h"

#include <queue>
#include <tuple>

namespace shmpart {
namespace {
struct Candidate {
  BlockID target = kInvalidBlockID;
  EdgeWeight gain = 0;
};

// Best target for v among blocks that can take it. Adjacent blocks are ranked
// by connection; if none fits, the lightest fitting block is used.
Candidate best_target(
    const Graph &graph, const Partition &partition, const NodeID v, const NodeWeight bound,
    std::vector<EdgeWeight> &connection
) {
  const BlockID k = partition.k();
  connection.assign(k, 0);
  const BlockID own = partition.block(v);
  graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) { connection[partition.block(u)] += w; });

  const NodeWeight c = graph.vertex_weight(v);
  Candidate best;
  EdgeWeight best_connection = -1;
  NodeWeight best_weight = 0;
  for (BlockID b = 0; b < k; ++b) {
    if (b == own || partition.block_weight(b) + c > bound) {
      continue;
    }
    const bool better = connection[b] > best_connection ||
                        (connection[b] == best_connection && partition.block_weight(b) < best_weight);
    if (better) {
      best.target = b;
      best_connection = connection[b];
      best_weight = partition.block_weight(b);
    }
  }
  if (best.target != kInvalidBlockID) {
    best.gain = best_connection - connection[own];
  }
  return best;
}
} // namespace

bool rebalance(const Graph &graph, Partition &partition) {
  const NodeWeight bound = partition.bound();
  const BlockID k = partition.k();
  std::vector<EdgeWeight> connection;

  for (BlockID overloaded = 0; overloaded < k; ++overloaded) {
    if (partition.block_weight(overloaded) <= bound) {
      continue;
    }
    // max-heap of (gain, -vertex) with lazy revalidation
    std::priority_queue<std::tuple<EdgeWeight, std::int64_t>> queue;
    for (NodeID v = 0; v < graph.n(); ++v) {
      if (partition.block(v) != overloaded) {
        continue;
      }
      const Candidate candidate = best_target(graph, partition, v, bound, connection);
      if (candidate.target != kInvalidBlockID) {
        queue.emplace(candidate.gain, -static_cast<std::int64_t>(v));
      }
    }

    while (partition.block_weight(overloaded) > bound && !queue.empty()) {
      const auto [key, negated] = queue.top();
      queue.pop();
      const auto v = static_cast<NodeID>(-negated);
      const Candidate candidate = best_target(graph, partition, v, bound, connection);
      if (candidate.target == kInvalidBlockID) {
        continue;
      }
      if (candidate.gain != key) {
        queue.emplace(candidate.gain, negated);
        continue;
      }
      partition.move(graph, v, candidate.target);
    }
  }
  return partition.balanced();
}

} // namespace shmpart
