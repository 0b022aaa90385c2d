/*******************************************************************************
 * Graph bisection by greedy region growing followed by two-way FM refinement.
 *
 * @file:   bisection.h
 ******************************************************************************/
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"

namespace shmpart {

struct BisectionBounds {
  // Weight that region growing aims for in block 0.
  NodeWeight target0 = 0;
  std::array<NodeWeight, 2> max_weight{0, 0};
};

struct Bisection {
  std::vector<std::uint8_t> side;
  std::array<NodeWeight, 2> weight{0, 0};
  EdgeWeight cut = 0;
  // False if no bisection within the bounds was found (best effort result).
  bool feasible = true;
};

struct BisectionConfig {
  std::size_t growing_attempts = 3;
  std::size_t fm_passes = 10;
};

// Weight by which `weight` exceeds the bounds, summed over both sides.
NodeWeight bisection_overload(const std::array<NodeWeight, 2> &weight, const BisectionBounds &bounds);

// Bounds for a split into blocks that receive k0 and k1 of the final blocks:
// block i may weigh at most (1 + epsilon) * ceil(c(V) * k_i / (k0 + k1)).
BisectionBounds proportional_bounds(NodeWeight total_weight, BlockID k0, BlockID k1, double epsilon);

// Grows block 0 breadth-first from `start` until it reaches bounds.target0;
// continues from unvisited vertices in `fallback_order` on disconnected graphs.
Bisection grow_bisection(
    const Graph &graph, NodeID start, const BisectionBounds &bounds, std::span<const NodeID> fallback_order
);

// Two-way FM with rollback to the best state of each pass. States are ranked
// by (overload, cut). Returns true if the partition improved.
bool fm_refine_bisection(
    const Graph &graph, Bisection &bisection, const BisectionBounds &bounds, std::size_t max_passes
);

Bisection bisect(
    const Graph &graph, const BisectionBounds &bounds, std::uint64_t seed, const BisectionConfig &config = {}
);

// Halves bounded by (1 + epsilon) * ceil(c(V) / 2). Requires n >= 2.
Bisection bisect(const Graph &graph, double epsilon, std::uint64_t seed);

} // namespace shmpart
