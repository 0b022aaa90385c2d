/*******************************************************************************
 * Initial k-way partitioning of the coarsest graph by recursive bisection,
 * repeated with independent seeds.
 *
 * @file:   initial_partitioning.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/initial/bisection.h"
#include "shmpart/parallel/worker_pool.h"
#include "shmpart/partition.h"

namespace shmpart {

// (1 + epsilon)^(1 / ceil(log2 k)) - 1; epsilon itself for k <= 2.
double adapted_epsilon(double epsilon, BlockID k);

struct RecursiveBisectionResult {
  std::vector<BlockID> assignment;
  // False if some bisection missed its bounds.
  bool feasible = true;
};

// Splits k into ceil(k/2) and floor(k/2) blocks with proportional weight
// targets, recursing on the induced subgraphs. Blocks are numbered
// consecutively from the left-most leaf.
RecursiveBisectionResult recursive_bisection_assignment(
    const Graph &graph, BlockID k, double epsilon, std::uint64_t seed, const BisectionConfig &config = {}
);

Partition recursive_bisection(const Graph &graph, BlockID k, double epsilon, std::uint64_t seed);

struct InitialPartitioningStats {
  std::size_t attempts = 0;
  std::vector<EdgeWeight> cuts;
  std::vector<bool> balanced;
  std::size_t selected = 0;
};

// Runs max(workers, attempts) independent attempts, each on its own copy of
// the graph. Picks the balanced attempt with the smallest cut, or the attempt
// with the smallest overload if none is balanced; remaining ties go to the
// lower attempt index. Throws std::invalid_argument if k == 0 or k > n.
Partition initial_partition(
    const Graph &graph,
    BlockID k,
    double epsilon,
    std::size_t attempts,
    WorkerPool &pool,
    std::uint64_t seed,
    InitialPartitioningStats *stats = nullptr
);

Partition initial_partition(
    const Graph &graph, BlockID k, double epsilon, std::size_t attempts, std::size_t workers, std::uint64_t seed
);

} // namespace shmpart
