/*******************************************************************************
 * Multilevel hierarchy construction by repeated clustering and contraction.
 *
 * @file:   hierarchy.h
 ******************************************************************************/
#pragma once

#include <optional>
#include <vector>

#include "shmpart/coarsening/contraction.h"
#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/parallel/worker_pool.h"

namespace shmpart {

struct CoarseningConfig {
  std::size_t lp_iterations = 10;
  // Clusters are bounded by c(V) / (cluster_factor * k).
  NodeWeight cluster_factor = 16;
  NodeID min_coarsest_vertices = 1000;
  NodeID coarsest_vertices_per_block = 30;
  double min_shrink_factor = 1.1;
  // Overrides the derived cluster weight bound when set.
  std::optional<NodeWeight> cluster_weight_bound;
};

// max(min_coarsest_vertices, coarsest_vertices_per_block * k).
NodeID coarsest_threshold(BlockID k, const CoarseningConfig &config);

// max(max vertex weight, ceil(c(V) / (f * k))) unless overridden.
NodeWeight cluster_weight_bound(const Graph &graph, BlockID k, const CoarseningConfig &config);

// Levels are returned finest first; levels[i].coarse_graph is the input of
// level i + 1. Stops once the current graph is at or below the threshold,
// when a contraction does not shrink the graph at all (that level is
// discarded), or after a level whose shrink factor is below the guard.
std::vector<HierarchyLevel> build_hierarchy(
    const Graph &graph,
    BlockID k,
    double epsilon,
    const CoarseningConfig &config,
    std::uint64_t seed,
    WorkerPool &pool
);

std::vector<HierarchyLevel> build_hierarchy(
    const Graph &graph,
    BlockID k,
    double epsilon,
    const CoarseningConfig &config,
    std::uint64_t seed,
    std::size_t workers
);

} // namespace shmpart
