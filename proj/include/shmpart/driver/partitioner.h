/*******************************************************************************
 * Multilevel k-way partitioner: coarsening, initial partitioning, and
 * uncoarsening with label propagation and multi-try local search.
 *
 * @file:   partitioner.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "shmpart/coarsening/contraction.h"
#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/parallel/worker_pool.h"
#include "shmpart/partition.h"

namespace shmpart {

struct PartitionerConfig {
  BlockID k = 2;
  double epsilon = 0.03;
  std::size_t workers = 1;
  std::uint64_t seed = 0;

  std::size_t coarsening_iterations = 10;
  std::size_t refinement_iterations = 25;
  std::size_t initial_attempts = 4;
  std::size_t mls_global_iterations = 3;
  double mls_threshold = 0.1;
  NodeWeight cluster_factor = 16;
  NodeID min_coarsest_vertices = 1000;
  NodeID coarsest_vertices_per_block = 30;

  // Stopping rule parameters of the local searches; beta defaults to ln(n).
  double alpha = 3.0;
  std::optional<double> beta;

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct PhaseRecord {
  std::string phase;
  std::size_t level = 0;
  EdgeWeight cut = 0;
  double seconds = 0.0;
};

struct MetricsReport {
  // Level 0 is the input graph; higher levels are coarser. Phases are
  // coarsening, initial_partitioning, rebalance, lp_refinement, mls_apply (one
  // row per replay of the multi-try search), mls, projection and total.
  std::vector<PhaseRecord> records;
  std::size_t levels = 0;
  double coarsening_seconds = 0.0;
  double initial_partitioning_seconds = 0.0;
  double refinement_seconds = 0.0;
  double total_seconds = 0.0;
  EdgeWeight final_cut = 0;
  NodeWeight max_block_weight = 0;
  bool imbalanced = false;

  [[nodiscard]] double seconds_of(const std::string &phase) const;

  // One row per record: phase,level,cut,time.
  void write_csv(std::ostream &out) const;
};

struct PartitionResult {
  Partition partition;
  MetricsReport metrics;
};

// Assigns every fine vertex the block of its coarse representative. Block
// weights and cut carry over unchanged.
Partition project_partition(const Partition &coarse, const HierarchyLevel &level);

// Throws std::invalid_argument if k == 0 or k > n.
PartitionResult partition_graph(const Graph &graph, const PartitionerConfig &config);
PartitionResult partition_graph(const Graph &graph, const PartitionerConfig &config, WorkerPool &pool);

} // namespace shmpart
