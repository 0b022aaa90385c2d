/*******************************************************************************
 * @file:   hierarchy.cc
 ******************************************************************************/
#include "shmpart/coarsening/hierarchy.h"

#include <algorithm>
#include <stdexcept>

#include "shmpart/coarsening/label_propagation.h"
#include "shmpart/random.h"

namespace shmpart {

NodeID coarsest_threshold(const BlockID k, const CoarseningConfig &config) {
  const std::uint64_t per_block = static_cast<std::uint64_t>(config.coarsest_vertices_per_block) * k;
  return static_cast<NodeID>(
      std::min<std::uint64_t>(std::max<std::uint64_t>(config.min_coarsest_vertices, per_block), kInvalidNodeID)
  );
}

NodeWeight cluster_weight_bound(const Graph &graph, const BlockID k, const CoarseningConfig &config) {
  if (config.cluster_weight_bound) {
    return *config.cluster_weight_bound;
  }
  if (k == 0 || config.cluster_factor <= 0) {
    throw std::invalid_argument("k and the cluster factor must be positive");
  }
  const NodeWeight divisor = config.cluster_factor * static_cast<NodeWeight>(k);
  const NodeWeight ceil_share = (graph.total_vertex_weight() + divisor - 1) / divisor;
  return std::max(graph.max_vertex_weight(), ceil_share);
}

std::vector<HierarchyLevel> build_hierarchy(
    const Graph &graph,
    const BlockID k,
    double /* epsilon */,
    const CoarseningConfig &config,
    const std::uint64_t seed,
    WorkerPool &pool
) {
  std::vector<HierarchyLevel> levels;
  const NodeID threshold = coarsest_threshold(k, config);
  const NodeWeight bound = cluster_weight_bound(graph, k, config);

  const Graph *current = &graph;
  while (current->n() > threshold) {
    const auto clustering = lp_cluster(
        *current,
        std::max(bound, current->max_vertex_weight()),
        config.lp_iterations,
        derive_seed(seed, 2, levels.size()),
        pool
    );
    HierarchyLevel level = contract(*current, clustering.cluster, pool);
    const NodeID fine_n = current->n();
    const NodeID coarse_n = level.coarse_graph.n();
    if (coarse_n >= fine_n) {
      break;
    }
    levels.push_back(std::move(level));
    current = &levels.back().coarse_graph;
    if (static_cast<double>(fine_n) < config.min_shrink_factor * coarse_n) {
      break;
    }
  }
  return levels;
}

std::vector<HierarchyLevel> build_hierarchy(
    const Graph &graph,
    const BlockID k,
    const double epsilon,
    const CoarseningConfig &config,
    const std::uint64_t seed,
    const std::size_t workers
) {
  WorkerPool pool(workers);
  return build_hierarchy(graph, k, epsilon, config, seed, pool);
}

} // namespace shmpart
