/*******************************************************************************
 * Size-constrained label propagation over blocks.
 *
 * @file:   lp_refinement.h
 ******************************************************************************/
#pragma once

#include <cstdint>

#include "shmpart/graph.h"
#include "shmpart/parallel/worker_pool.h"
#include "shmpart/partition.h"

namespace shmpart {

struct LpRefinementStats {
  std::size_t rounds = 0;
  // True if a parallel round raised the cut and was undone.
  bool reverted = false;
};

// Vertices move to the adjacent block with the strongest connection if it is
// strictly stronger than the connection to their own block and the target
// stays within the partition's weight bound. With a single worker every move
// strictly lowers the cut. With several workers moves are computed against
// concurrently changing labels, so each round is checked against the cut
// before it and undone if the cut grew. Returns the cut reduction.
EdgeWeight lp_refine(
    const Graph &graph,
    Partition &partition,
    std::size_t iterations,
    WorkerPool &pool,
    std::uint64_t seed,
    LpRefinementStats *stats = nullptr
);

EdgeWeight lp_refine(
    const Graph &graph, Partition &partition, std::size_t iterations, std::size_t workers, std::uint64_t seed
);

} // namespace shmpart
