/*******************************************************************************
 * @file:   initial_partitioning.cc
 ******************************************************************************/
#include "shmpart/initial/initial_partitioning.h"

#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "shmpart/random.h"

namespace shmpart {
namespace {
struct RecursionContext {
  double epsilon;
  std::uint64_t seed;
  const BisectionConfig &config;
  std::vector<BlockID> &assignment;
  bool feasible = true;
};

void recurse(
    const Graph &graph, std::span<const NodeID> to_original, const BlockID k, const BlockID first_block,
    RecursionContext &ctx
) {
  const NodeID n = graph.n();
  if (k == 1 || n <= 1) {
    for (const NodeID v : to_original) {
      ctx.assignment[v] = first_block;
    }
    return;
  }

  const BlockID k0 = (k + 1) / 2;
  const BlockID k1 = k / 2;
  const auto bounds = proportional_bounds(graph.total_vertex_weight(), k0, k1, ctx.epsilon);
  const Bisection bisection = bisect(graph, bounds, derive_seed(ctx.seed, first_block, k), ctx.config);
  ctx.feasible &= bisection.feasible;

  std::array<std::vector<NodeID>, 2> local;
  for (NodeID v = 0; v < n; ++v) {
    local[bisection.side[v]].push_back(v);
  }
  const std::array<BlockID, 2> k_side{k0, k1};
  const std::array<BlockID, 2> first{first_block, first_block + k0};
  for (int s = 0; s < 2; ++s) {
    std::vector<NodeID> original(local[s].size());
    for (std::size_t i = 0; i < local[s].size(); ++i) {
      original[i] = to_original[local[s][i]];
    }
    if (k_side[s] == 1) {
      for (const NodeID v : original) {
        ctx.assignment[v] = first[s];
      }
      continue;
    }
    const Graph sub = induced_subgraph(graph, local[s]);
    recurse(sub, original, k_side[s], first[s], ctx);
  }
}
} // namespace

double adapted_epsilon(const double epsilon, const BlockID k) {
  if (k <= 2) {
    return epsilon;
  }
  const auto depth = static_cast<double>(std::bit_width(static_cast<std::uint32_t>(k - 1)));
  return std::pow(1.0 + epsilon, 1.0 / depth) - 1.0;
}

RecursiveBisectionResult recursive_bisection_assignment(
    const Graph &graph, const BlockID k, const double epsilon, const std::uint64_t seed,
    const BisectionConfig &config
) {
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  RecursiveBisectionResult result;
  result.assignment.assign(graph.n(), 0);
  RecursionContext ctx{adapted_epsilon(epsilon, k), seed, config, result.assignment};
  std::vector<NodeID> identity(graph.n());
  std::iota(identity.begin(), identity.end(), 0);
  recurse(graph, identity, k, 0, ctx);
  result.feasible = ctx.feasible;
  return result;
}

Partition
recursive_bisection(const Graph &graph, const BlockID k, const double epsilon, const std::uint64_t seed) {
  auto result = recursive_bisection_assignment(graph, k, epsilon, seed);
  return Partition(graph, k, epsilon, std::move(result.assignment));
}

Partition initial_partition(
    const Graph &graph,
    const BlockID k,
    const double epsilon,
    const std::size_t attempts,
    WorkerPool &pool,
    const std::uint64_t seed,
    InitialPartitioningStats *stats
) {
  if (k == 0) {
    throw std::invalid_argument("k must be positive");
  }
  if (k > graph.n()) {
    throw std::invalid_argument("k exceeds the number of vertices of the coarsest graph");
  }
  const std::size_t total_attempts = std::max<std::size_t>({pool.size(), attempts, 1});
  const NodeWeight bound = max_block_weight_bound(graph.total_vertex_weight(), k, epsilon);

  std::vector<EdgeWeight> cuts(total_attempts, 0);
  std::vector<bool> balanced(total_attempts, false);
  std::mutex best_mutex;
  std::optional<Partition> best;
  std::tuple<bool, NodeWeight, EdgeWeight, std::size_t> best_key;

  parallel_for(pool, 0, total_attempts, 1, [&](const std::size_t first, const std::size_t last, std::size_t) {
    for (std::size_t attempt = first; attempt < last; ++attempt) {
      const Graph copy = graph;
      Partition candidate = recursive_bisection(copy, k, epsilon, derive_seed(seed, 3, attempt));
      const NodeWeight overload = std::max<NodeWeight>(0, candidate.max_block_weight() - bound);
      const auto key = std::make_tuple(overload > 0, overload, candidate.cut(), attempt);

      std::lock_guard lock(best_mutex);
      cuts[attempt] = candidate.cut();
      balanced[attempt] = overload == 0;
      if (!best || key < best_key) {
        best_key = key;
        best = std::move(candidate);
      }
    }
  });

  if (stats != nullptr) {
    stats->attempts = total_attempts;
    stats->cuts = std::move(cuts);
    stats->balanced = std::move(balanced);
    stats->selected = std::get<3>(best_key);
  }
  return std::move(*best);
}

Partition initial_partition(
    const Graph &graph, const BlockID k, const double epsilon, const std::size_t attempts, const std::size_t workers,
    const std::uint64_t seed
) {
  WorkerPool pool(workers);
  return initial_partition(graph, k, epsilon, attempts, pool, seed);
}

} // namespace shmpart
