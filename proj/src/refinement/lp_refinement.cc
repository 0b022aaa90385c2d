/*******************************************************************************
 * @file:   lp_refinement.cc
 ******************************************************************************/
#include "shmpart/refinement/lp_refinement.h"

#include "shmpart/coarsening/label_propagation.h"

namespace shmpart {

EdgeWeight lp_refine(
    const Graph &graph,
    Partition &partition,
    const std::size_t iterations,
    WorkerPool &pool,
    const std::uint64_t seed,
    LpRefinementStats *stats
) {
  const EdgeWeight initial_cut = partition.cut();
  if (partition.k() < 2 || iterations == 0) {
    return 0;
  }

  std::vector<Label> labels(partition.assignment().begin(), partition.assignment().end());
  SizeConstrainedLabelPropagation lp(graph, pool, labels, partition.k(), partition.bound(), seed);

  EdgeWeight cut = initial_cut;
  LpRefinementStats local_stats;
  for (std::size_t round = 0; round < iterations; ++round) {
    const NodeID moved = lp.iterate();
    ++local_stats.rounds;
    if (moved == 0) {
      break;
    }
    std::vector<Label> next = lp.labels();
    if (pool.size() > 1) {
      const EdgeWeight next_cut = cut_size(graph, next);
      if (next_cut > cut) {
        lp.restore(labels);
        local_stats.reverted = true;
        break;
      }
      cut = next_cut;
    }
    labels = std::move(next);
  }

  partition.reassign(graph, std::vector<BlockID>(labels.begin(), labels.end()));
  if (stats != nullptr) {
    *stats = local_stats;
  }
  return initial_cut - partition.cut();
}

EdgeWeight lp_refine(
    const Graph &graph, Partition &partition, const std::size_t iterations, const std::size_t workers,
    const std::uint64_t seed
) {
  WorkerPool pool(workers);
  return lp_refine(graph, partition, iterations, pool, seed);
}

} // namespace shmpart
