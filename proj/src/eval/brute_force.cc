/*******************************************************************************
 * @file:   brute_force.cc
 ******************************************************************************/
#include "shmpart/eval/brute_force.h"

#include <stdexcept>

#include "shmpart/partition.h"

namespace shmpart::eval {
namespace {
constexpr double kMaxAssignments = 1e7;

struct Search {
  const Graph &graph;
  BlockID k;
  NodeWeight bound;
  std::vector<BlockID> assignment;
  std::vector<NodeWeight> weight;
  std::optional<BruteForceResult> best;

  // Vertices are assigned in ID order; cut counts edges to earlier vertices.
  void descend(const NodeID v, const EdgeWeight cut, const BlockID used_blocks) {
    if (best && cut >= best->cut) {
      return;
    }
    if (v == graph.n()) {
      best = BruteForceResult{cut, assignment};
      return;
    }
    // blocks beyond the first unused one are symmetric to it
    const BlockID limit = std::min<BlockID>(k, used_blocks + 1);
    for (BlockID b = 0; b < limit; ++b) {
      if (weight[b] + graph.vertex_weight(v) > bound) {
        continue;
      }
      EdgeWeight added = 0;
      graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
        if (u < v && assignment[u] != b) {
          added += w;
        }
      });
      assignment[v] = b;
      weight[b] += graph.vertex_weight(v);
      descend(v + 1, cut + added, std::max<BlockID>(used_blocks, b + 1));
      weight[b] -= graph.vertex_weight(v);
    }
    assignment[v] = kInvalidBlockID;
  }
};
} // namespace

std::optional<BruteForceResult> brute_force_optimal(const Graph &graph, const BlockID k, const double epsilon) {
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  double assignments = 1.0;
  for (NodeID v = 0; v < graph.n(); ++v) {
    assignments *= k;
    if (assignments > kMaxAssignments) {
      throw std::invalid_argument("instance too large for exhaustive search");
    }
  }
  Search search{
      graph,
      k,
      max_block_weight_bound(graph.total_vertex_weight(), k, epsilon),
      std::vector<BlockID>(graph.n(), kInvalidBlockID),
      std::vector<NodeWeight>(k, 0),
      std::nullopt
  };
  search.descend(0, 0, 0);
  return search.best;
}

} // namespace shmpart::eval
