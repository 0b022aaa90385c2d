/*******************************************************************************
 * Parallel cluster contraction.
 *
 * @file:   contraction.h
 ******************************************************************************/
#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/hashing/cache_aware_map.h"
#include "shmpart/parallel/worker_pool.h"

namespace shmpart {

struct HierarchyLevel {
  Graph coarse_graph;
  // Coarse vertex per fine vertex.
  std::vector<NodeID> map_to_coarse;
};

// Shared insert-or-add map keyed by coarse vertex pairs. The result is the same
// as sequential insert-or-add under any interleaving of add() calls. Entries
// are spread over lock-protected stripes by their first coordinate; each
// stripe is a growable cache-aware map.
class ConcurrentEdgeAccumulator {
public:
  ConcurrentEdgeAccumulator(NodeID num_coarse_vertices, std::size_t capacity_hint, std::size_t workers);

  void add(NodeID a, NodeID b, EdgeWeight weight);

  template <typename Lambda> void for_each(Lambda &&lambda) const {
    for (const auto &stripe : _stripes) {
      stripe->map.for_each([&](const std::uint64_t key, const EdgeWeight weight) {
        lambda(static_cast<NodeID>(key >> _shift), static_cast<NodeID>(key & _low_mask), weight);
      });
    }
  }

  [[nodiscard]] std::size_t size() const;

private:
  struct alignas(64) Stripe {
    explicit Stripe(std::size_t capacity, std::shared_ptr<const TabularHasher> hasher)
        : map(capacity, std::move(hasher)) {}

    std::mutex mutex;
    CacheAwareMap<std::uint64_t, EdgeWeight> map;
  };

  unsigned _shift;
  std::uint64_t _low_mask;
  std::vector<std::unique_ptr<Stripe>> _stripes;
};

// Initial accumulator capacity: min(avg_deg * |V'|, |E| / 10) with
// avg_deg = 2|E| / |V| of the fine graph.
std::size_t accumulator_capacity(const Graph &fine, NodeID num_coarse_vertices);

// Contracts every cluster into one vertex. Cluster IDs are arbitrary values
// below n; they are remapped to [0, |V'|) preserving their relative order.
HierarchyLevel contract(const Graph &graph, std::span<const NodeID> cluster, WorkerPool &pool);
HierarchyLevel contract(const Graph &graph, std::span<const NodeID> cluster, std::size_t workers);

} // namespace shmpart
