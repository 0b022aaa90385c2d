/*******************************************************************************
 * @file:   partitioner.cc
 ******************************************************************************/
#include "shmpart/driver/partitioner.h"

#include <chrono>
#include <stdexcept>

#include "shmpart/coarsening/hierarchy.h"
#include "shmpart/initial/initial_partitioning.h"
#include "shmpart/random.h"
#include "shmpart/refinement/lp_refinement.h"
#include "shmpart/refinement/multitry_fm.h"
#include "shmpart/refinement/rebalance.h"

namespace shmpart {
namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

enum SeedTag : std::uint64_t {
  kCoarseningSeed = 20,
  kInitialSeed,
  kLpRefinementSeed,
  kMlsSeed,
};

void refine_level(
    const Graph &graph,
    Partition &partition,
    const PartitionerConfig &config,
    WorkerPool &pool,
    const std::size_t level,
    MetricsReport &report
) {
  if (!partition.balanced()) {
    const auto start = Clock::now();
    rebalance(graph, partition);
    report.records.push_back({"rebalance", level, partition.cut(), seconds_since(start)});
  }

  auto start = Clock::now();
  lp_refine(
      graph, partition, config.refinement_iterations, pool, derive_seed(config.seed, kLpRefinementSeed, level)
  );
  report.records.push_back({"lp_refinement", level, partition.cut(), seconds_since(start)});

  if (partition.balanced()) {
    start = Clock::now();
    MlsConfig mls_config;
    mls_config.global_iterations = config.mls_global_iterations;
    mls_config.local_threshold = config.mls_threshold;
    mls_config.alpha = config.alpha;
    mls_config.beta = config.beta;
    MlsStats stats;
    mls(graph, partition, mls_config, pool, derive_seed(config.seed, kMlsSeed, level), &stats);
    for (const EdgeWeight cut : stats.cut_after_apply) {
      report.records.push_back({"mls_apply", level, cut, 0.0});
    }
    report.records.push_back({"mls", level, partition.cut(), seconds_since(start)});
  }
}
} // namespace

void PartitionerConfig::validate() const {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be non-negative");
  }
  if (workers == 0 || coarsening_iterations == 0 || refinement_iterations == 0 || initial_attempts == 0 ||
      mls_global_iterations == 0) {
    throw std::invalid_argument("workers and iteration counts must be at least 1");
  }
  if (!(mls_threshold > 0.0 && mls_threshold < 1.0)) {
    throw std::invalid_argument("local search threshold must lie in (0, 1)");
  }
  if (cluster_factor <= 0) {
    throw std::invalid_argument("cluster factor must be positive");
  }
}

double MetricsReport::seconds_of(const std::string &phase) const {
  double total = 0.0;
  for (const PhaseRecord &record : records) {
    if (record.phase == phase) {
      total += record.seconds;
    }
  }
  return total;
}

void MetricsReport::write_csv(std::ostream &out) const {
  out << "phase,level,cut,time\n";
  for (const PhaseRecord &record : records) {
    out << record.phase << ',' << record.level << ',' << record.cut << ',' << record.seconds << '\n';
  }
}

Partition project_partition(const Partition &coarse, const HierarchyLevel &level) {
  std::vector<BlockID> assignment(level.map_to_coarse.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    assignment[v] = coarse.block(level.map_to_coarse[v]);
  }
  return Partition::adopt(
      coarse.k(),
      coarse.epsilon(),
      coarse.total_weight(),
      std::move(assignment),
      std::vector<NodeWeight>(coarse.block_weights().begin(), coarse.block_weights().end()),
      coarse.cut()
  );
}

PartitionResult partition_graph(const Graph &graph, const PartitionerConfig &config, WorkerPool &pool) {
  config.validate();
  if (config.k > graph.n()) {
    throw std::invalid_argument("k exceeds the number of vertices");
  }
  const auto total_start = Clock::now();
  PartitionResult result;
  MetricsReport &report = result.metrics;

  auto start = Clock::now();
  CoarseningConfig coarsening;
  coarsening.lp_iterations = config.coarsening_iterations;
  coarsening.cluster_factor = config.cluster_factor;
  coarsening.min_coarsest_vertices = config.min_coarsest_vertices;
  coarsening.coarsest_vertices_per_block = config.coarsest_vertices_per_block;
  const std::vector<HierarchyLevel> hierarchy = build_hierarchy(
      graph, config.k, config.epsilon, coarsening, derive_seed(config.seed, kCoarseningSeed), pool
  );
  report.coarsening_seconds = seconds_since(start);
  report.levels = hierarchy.size();
  report.records.push_back({"coarsening", hierarchy.size(), 0, report.coarsening_seconds});

  const Graph &coarsest = hierarchy.empty() ? graph : hierarchy.back().coarse_graph;
  start = Clock::now();
  Partition partition = initial_partition(
      coarsest,
      config.k,
      config.epsilon,
      config.initial_attempts,
      pool,
      derive_seed(config.seed, kInitialSeed)
  );
  report.initial_partitioning_seconds = seconds_since(start);
  report.records.push_back(
      {"initial_partitioning", hierarchy.size(), partition.cut(), report.initial_partitioning_seconds}
  );

  start = Clock::now();
  if (config.k > 1) {
    refine_level(coarsest, partition, config, pool, hierarchy.size(), report);
    for (std::size_t level = hierarchy.size(); level > 0; --level) {
      const Graph &fine = (level == 1) ? graph : hierarchy[level - 2].coarse_graph;
      const auto projection_start = Clock::now();
      partition = project_partition(partition, hierarchy[level - 1]);
      report.records.push_back({"projection", level - 1, partition.cut(), seconds_since(projection_start)});
      refine_level(fine, partition, config, pool, level - 1, report);
    }
  } else if (!hierarchy.empty()) {
    partition = Partition(graph, 1, config.epsilon, std::vector<BlockID>(graph.n(), 0));
  }
  report.refinement_seconds = seconds_since(start);

  report.total_seconds = seconds_since(total_start);
  report.final_cut = partition.cut();
  report.max_block_weight = partition.max_block_weight();
  report.imbalanced = !partition.balanced();
  report.records.push_back({"total", 0, partition.cut(), report.total_seconds});
  result.partition = std::move(partition);
  return result;
}

PartitionResult partition_graph(const Graph &graph, const PartitionerConfig &config) {
  config.validate();
  WorkerPool pool(config.workers);
  return partition_graph(graph, config, pool);
}

} // namespace shmpart
