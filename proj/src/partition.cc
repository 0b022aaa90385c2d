/*******************************************************************************
 * @file:   partition.cc
 ******************************************************************************/
#include "shmpart/partition.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shmpart {

double l_max(const NodeWeight total_weight, const BlockID k, const double epsilon) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  const NodeWeight per_block = (total_weight + static_cast<NodeWeight>(k) - 1) / k;
  return (1.0 + epsilon) * static_cast<double>(per_block);
}

NodeWeight max_block_weight_bound(const NodeWeight total_weight, const BlockID k, const double epsilon) {
  const double bound = l_max(total_weight, k, epsilon);
  auto floored = static_cast<NodeWeight>(std::floor(bound));
  // (1 + eps) * c may land a few ulps below an exact integer
  if (static_cast<double>(floored + 1) <= bound * (1.0 + 1e-12)) {
    ++floored;
  }
  return floored;
}

Partition::Partition(
    const Graph &graph, const BlockID k, const double epsilon, std::vector<BlockID> assignment
)
    : _k(k),
      _epsilon(epsilon),
      _total_weight(graph.total_vertex_weight()) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  reassign(graph, std::move(assignment));
}

Partition Partition::adopt(
    const BlockID k, const double epsilon, const NodeWeight total_weight,
    std::vector<BlockID> assignment, std::vector<NodeWeight> block_weights, const EdgeWeight cut
) {
  Partition p;
  p._k = k;
  p._epsilon = epsilon;
  p._total_weight = total_weight;
  p._assignment = std::move(assignment);
  p._block_weights = std::move(block_weights);
  p._cut = cut;
  return p;
}

void Partition::reassign(const Graph &graph, std::vector<BlockID> assignment) {
  if (assignment.size() != graph.n()) {
    throw std::invalid_argument("assignment length differs from vertex count");
  }
  _block_weights.assign(_k, 0);
  for (NodeID v = 0; v < graph.n(); ++v) {
    if (assignment[v] >= _k) {
      throw std::invalid_argument("block ID out of range");
    }
    _block_weights[assignment[v]] += graph.vertex_weight(v);
  }
  _assignment = std::move(assignment);
  _cut = cut_size(graph, _assignment);
}

NodeWeight Partition::max_block_weight() const {
  return _block_weights.empty() ? 0 : *std::max_element(_block_weights.begin(), _block_weights.end());
}

void Partition::move(const Graph &graph, const NodeID v, const BlockID to) {
  const BlockID from = _assignment[v];
  if (from == to) {
    return;
  }
  EdgeWeight to_from = 0;
  EdgeWeight to_target = 0;
  graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
    const BlockID b = _assignment[u];
    if (b == from) {
      to_from += w;
    } else if (b == to) {
      to_target += w;
    }
  });
  _cut += to_from - to_target;
  _block_weights[from] -= graph.vertex_weight(v);
  _block_weights[to] += graph.vertex_weight(v);
  _assignment[v] = to;
}

EdgeWeight cut_size(const Graph &graph, std::span<const BlockID> assignment) {
  EdgeWeight twice_cut = 0;
  for (NodeID v = 0; v < graph.n(); ++v) {
    graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
      if (assignment[u] != assignment[v]) {
        twice_cut += w;
      }
    });
  }
  return twice_cut / 2;
}

EdgeWeight cut_size(const Graph &graph, const Partition &partition) {
  return cut_size(graph, partition.assignment());
}

GainResult gain(const Graph &graph, const Partition &partition, const NodeID v) {
  if (partition.k() < 2) {
    throw std::invalid_argument("gain requires k >= 2");
  }
  std::vector<EdgeWeight> scratch;
  return compute_gain(
      graph, v, partition.k(), [&](const NodeID u) { return partition.block(u); }, scratch
  );
}

PartitionReport validate_partition(
    const Graph &graph, std::span<const BlockID> assignment, const BlockID k, const double epsilon
) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  if (assignment.size() != graph.n()) {
    throw std::invalid_argument("assignment length differs from vertex count");
  }
  std::vector<NodeWeight> weights(k, 0);
  for (NodeID v = 0; v < graph.n(); ++v) {
    if (assignment[v] >= k) {
      throw std::invalid_argument("block ID out of range");
    }
    weights[assignment[v]] += graph.vertex_weight(v);
  }

  PartitionReport report;
  report.cut = cut_size(graph, assignment);
  const NodeWeight bound = max_block_weight_bound(graph.total_vertex_weight(), k, epsilon);
  for (BlockID b = 0; b < k; ++b) {
    report.max_block_weight = std::max(report.max_block_weight, weights[b]);
    if (weights[b] > bound) {
      report.overloaded_blocks.push_back(b);
    }
  }
  report.balanced = report.overloaded_blocks.empty();
  return report;
}

PartitionReport validate_partition(const Graph &graph, const Partition &partition) {
  return validate_partition(graph, partition.assignment(), partition.k(), partition.epsilon());
}

} // namespace shmpart
