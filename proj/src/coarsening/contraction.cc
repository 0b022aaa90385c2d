/*******************************************************************************
 * @file:   contraction.cc
 ******************************************************************************/
#include "shmpart/coarsening/contraction.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

namespace shmpart {
namespace {
std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  return x;
}
} // namespace

ConcurrentEdgeAccumulator::ConcurrentEdgeAccumulator(
    const NodeID num_coarse_vertices, const std::size_t capacity_hint, const std::size_t workers
)
    : _shift(std::max<unsigned>(1, std::bit_width(std::max<NodeID>(num_coarse_vertices, 2) - 1))),
      _low_mask((std::uint64_t{1} << _shift) - 1) {
  const std::size_t num_stripes = std::bit_ceil(std::max<std::size_t>(1, workers) * 16);
  auto hasher = std::make_shared<const TabularHasher>(TabularHashConfig{}, 2 * _shift);
  const std::size_t per_stripe = 2 * capacity_hint / num_stripes + 1;
  _stripes.reserve(num_stripes);
  for (std::size_t i = 0; i < num_stripes; ++i) {
    _stripes.push_back(std::make_unique<Stripe>(per_stripe, hasher));
  }
}

void ConcurrentEdgeAccumulator::add(const NodeID a, const NodeID b, const EdgeWeight weight) {
  Stripe &stripe = *_stripes[mix(a) & (_stripes.size() - 1)];
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << _shift) | b;
  std::lock_guard lock(stripe.mutex);
  stripe.map.add(key, weight);
}

std::size_t ConcurrentEdgeAccumulator::size() const {
  std::size_t total = 0;
  for (const auto &stripe : _stripes) {
    total += stripe->map.size();
  }
  return total;
}

std::size_t accumulator_capacity(const Graph &fine, const NodeID num_coarse_vertices) {
  if (fine.n() == 0) {
    return 0;
  }
  const double avg_deg = 2.0 * static_cast<double>(fine.m()) / fine.n();
  const auto by_degree = static_cast<std::size_t>(avg_deg * num_coarse_vertices);
  return std::min<std::size_t>(by_degree, fine.m() / 10);
}

HierarchyLevel contract(const Graph &graph, std::span<const NodeID> cluster, WorkerPool &pool) {
  const NodeID n = graph.n();
  if (cluster.size() != n) {
    throw std::invalid_argument("one cluster ID per vertex required");
  }
  constexpr std::size_t kGrain = 4096;

  // phase 1: dense remap via prefix sum over cluster indicators
  std::vector<NodeID> remap(n, 0);
  parallel_for(pool, 0, n, kGrain, [&](const std::size_t first, const std::size_t last, std::size_t) {
    for (std::size_t v = first; v < last; ++v) {
      if (cluster[v] >= n) {
        throw std::invalid_argument("cluster ID out of range");
      }
      std::atomic_ref<NodeID>(remap[cluster[v]]).store(1, std::memory_order_relaxed);
    }
  });
  const NodeID coarse_n = parallel_exclusive_prefix_sum(pool, remap);

  HierarchyLevel level;
  level.map_to_coarse.resize(n);
  parallel_for(pool, 0, n, kGrain, [&](const std::size_t first, const std::size_t last, std::size_t) {
    for (std::size_t v = first; v < last; ++v) {
      level.map_to_coarse[v] = remap[cluster[v]];
    }
  });

  // phase 2: accumulate inter-cluster edge weights, each fine edge once
  ConcurrentEdgeAccumulator accumulator(coarse_n, accumulator_capacity(graph, coarse_n), pool.size());
  parallel_for(pool, 0, n, 1024, [&](const std::size_t first, const std::size_t last, std::size_t) {
    for (std::size_t v = first; v < last; ++v) {
      const NodeID a = level.map_to_coarse[v];
      graph.for_each_neighbor(static_cast<NodeID>(v), [&](const NodeID u, const EdgeWeight w) {
        const NodeID b = level.map_to_coarse[u];
        if (a < b) {
          accumulator.add(a, b, w);
        }
      });
    }
  });

  // phase 3: sequential assembly
  std::vector<NodeWeight> vertex_weights(coarse_n, 0);
  for (NodeID v = 0; v < n; ++v) {
    vertex_weights[level.map_to_coarse[v]] += graph.vertex_weight(v);
  }

  std::vector<EdgeID> offsets(coarse_n + 1, 0);
  accumulator.for_each([&](const NodeID a, const NodeID b, EdgeWeight) {
    ++offsets[a + 1];
    ++offsets[b + 1];
  });
  for (NodeID c = 0; c < coarse_n; ++c) {
    offsets[c + 1] += offsets[c];
  }
  std::vector<EdgeID> fill(offsets.begin(), offsets.end() - 1);
  std::vector<std::pair<NodeID, EdgeWeight>> half(offsets.back());
  accumulator.for_each([&](const NodeID a, const NodeID b, const EdgeWeight w) {
    half[fill[a]++] = {b, w};
    half[fill[b]++] = {a, w};
  });

  std::vector<NodeID> targets(half.size());
  std::vector<EdgeWeight> edge_weights(half.size());
  for (NodeID c = 0; c < coarse_n; ++c) {
    const auto first = half.begin() + static_cast<std::ptrdiff_t>(offsets[c]);
    const auto last = half.begin() + static_cast<std::ptrdiff_t>(offsets[c + 1]);
    std::sort(first, last);
    for (EdgeID e = offsets[c]; e < offsets[c + 1]; ++e) {
      targets[e] = half[e].first;
      edge_weights[e] = half[e].second;
    }
  }

  level.coarse_graph = Graph(
      std::move(offsets), std::move(targets), std::move(edge_weights), std::move(vertex_weights)
  );
  return level;
}

HierarchyLevel contract(const Graph &graph, std::span<const NodeID> cluster, const std::size_t workers) {
  WorkerPool pool(workers);
  return contract(graph, cluster, pool);
}

} // namespace shmpart
