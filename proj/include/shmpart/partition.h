/*******************************************************************************
 * Partition bookkeeping: block assignment, block weights, cached cut, and the
 * cut / balance / gain arithmetic on top of it.
 *
 * @file:   partition.h
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"

namespace shmpart {

// (1 + epsilon) * ceil(total_weight / k), evaluated as written.
double l_max(NodeWeight total_weight, BlockID k, double epsilon);

// Largest integral block weight that satisfies the balance constraint, i.e.
// floor(l_max(...)). Integer block weights are compared against this value.
NodeWeight max_block_weight_bound(NodeWeight total_weight, BlockID k, double epsilon);

class Partition {
public:
  Partition() = default;

  // Computes block weights and the cut from scratch.
  Partition(const Graph &graph, BlockID k, double epsilon, std::vector<BlockID> assignment);

  // Adopts precomputed bookkeeping without recomputation (used by projection).
  static Partition
  adopt(BlockID k, double epsilon, NodeWeight total_weight, std::vector<BlockID> assignment,
        std::vector<NodeWeight> block_weights, EdgeWeight cut);

  [[nodiscard]] BlockID k() const {
    return _k;
  }
  [[nodiscard]] double epsilon() const {
    return _epsilon;
  }
  [[nodiscard]] NodeID n() const {
    return static_cast<NodeID>(_assignment.size());
  }
  [[nodiscard]] BlockID block(const NodeID v) const {
    return _assignment[v];
  }
  [[nodiscard]] std::span<const BlockID> assignment() const {
    return _assignment;
  }
  [[nodiscard]] NodeWeight block_weight(const BlockID b) const {
    return _block_weights[b];
  }
  [[nodiscard]] std::span<const NodeWeight> block_weights() const {
    return _block_weights;
  }
  [[nodiscard]] EdgeWeight cut() const {
    return _cut;
  }
  [[nodiscard]] NodeWeight total_weight() const {
    return _total_weight;
  }
  [[nodiscard]] NodeWeight bound() const {
    return max_block_weight_bound(_total_weight, _k, _epsilon);
  }
  [[nodiscard]] NodeWeight max_block_weight() const;
  [[nodiscard]] bool balanced() const {
    return max_block_weight() <= bound();
  }

  // Moves v to `to` and updates block weights and cut incrementally.
  void move(const Graph &graph, NodeID v, BlockID to);

  // Replaces the assignment wholesale and recomputes everything.
  void reassign(const Graph &graph, std::vector<BlockID> assignment);

private:
  BlockID _k = 0;
  double _epsilon = 0.0;
  NodeWeight _total_weight = 0;
  std::vector<BlockID> _assignment;
  std::vector<NodeWeight> _block_weights;
  EdgeWeight _cut = 0;
};

// Total weight of edges whose endpoints lie in different blocks; each
// undirected edge counted once.
EdgeWeight cut_size(const Graph &graph, std::span<const BlockID> assignment);
EdgeWeight cut_size(const Graph &graph, const Partition &partition);

struct GainResult {
  BlockID target = kInvalidBlockID;
  EdgeWeight value = 0;

  friend bool operator==(const GainResult &, const GainResult &) = default;
};

// Best block to move v to (ties to the smallest block ID) and the resulting cut
// decrease, which may be negative. `block_of` maps a vertex to its block.
template <typename BlockOf>
GainResult compute_gain(
    const Graph &graph, const NodeID v, const BlockID k, BlockOf &&block_of,
    std::vector<EdgeWeight> &connection_scratch
) {
  connection_scratch.assign(k, 0);
  const BlockID own = block_of(v);
  bool any_other = false;
  graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
    const BlockID b = block_of(u);
    connection_scratch[b] += w;
    any_other |= (b != own);
  });

  GainResult result;
  if (!any_other) {
    result.target = (own == 0) ? 1 : 0;
    result.value = -connection_scratch[own];
    return result;
  }
  EdgeWeight best = -1;
  for (BlockID b = 0; b < k; ++b) {
    if (b != own && connection_scratch[b] > best) {
      best = connection_scratch[b];
      result.target = b;
    }
  }
  result.value = best - connection_scratch[own];
  return result;
}

// Requires k >= 2. An isolated vertex yields (smallest other block, 0).
GainResult gain(const Graph &graph, const Partition &partition, NodeID v);

struct PartitionReport {
  bool balanced = true;
  EdgeWeight cut = 0;
  NodeWeight max_block_weight = 0;
  std::vector<BlockID> overloaded_blocks;
};

// Recomputes everything from scratch. Throws std::invalid_argument if an
// assignment entry is >= k or the assignment length differs from n.
PartitionReport validate_partition(
    const Graph &graph, std::span<const BlockID> assignment, BlockID k, double epsilon
);
PartitionReport validate_partition(const Graph &graph, const Partition &partition);

} // namespace shmpart
