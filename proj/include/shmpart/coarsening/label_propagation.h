/*******************************************************************************
 * Parallel size-constrained label propagation.
 *
 * Vertices are visited in increasing-degree order, grouped into work packets
 * that are pulled from a shared queue. A vertex moves to the eligible
 * neighboring label with the strongest connection if that connection is
 * strictly stronger than the one to its current label; among equally strong
 * candidates one is picked uniformly at random. Label weights are reserved
 * with compare-and-swap, so a label never exceeds the bound. Neighbors of
 * moved vertices form the work of the next round.
 *
 * The same engine clusters during coarsening (labels = cluster IDs) and
 * refines partitions (labels = block IDs, bound = L_max).
 *
 * @file:   label_propagation.h
 ******************************************************************************/
#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/parallel/worker_pool.h"
#include "shmpart/random.h"

namespace shmpart {

using Label = std::uint32_t;

struct WorkPacket {
  std::vector<NodeID> vertices;
  EdgeID degree_sum = 0;
};

// B = max(1000, sqrt(m)).
EdgeID packet_degree_bound(EdgeID m);

// Splits `order` into consecutive packets whose degree sum is at most `bound`;
// a vertex whose degree alone exceeds the bound forms a singleton packet.
std::vector<WorkPacket> build_packets(std::span<const NodeID> order, const Graph &graph, EdgeID bound);
std::vector<WorkPacket> build_packets(std::span<const NodeID> order, const Graph &graph);

// Vertices by increasing degree; vertices of equal degree in seeded random order.
std::vector<NodeID> degree_order(const Graph &graph, std::uint64_t seed);

struct LabelPropagationStats {
  std::vector<NodeID> moved_per_iteration;
  std::vector<EdgeID> touched_edges_per_iteration;
  // Largest label weight recomputed from the labels after each round.
  std::vector<NodeWeight> max_label_weight_per_iteration;
};

class SizeConstrainedLabelPropagation {
public:
  SizeConstrainedLabelPropagation(
      const Graph &graph,
      WorkerPool &pool,
      std::span<const Label> initial_labels,
      std::size_t num_labels,
      NodeWeight bound,
      std::uint64_t seed
  );

  // Runs one round over the active vertices; returns the number of moves.
  NodeID iterate();

  // Runs up to `max_iterations` rounds or until a round makes no move.
  void run(std::size_t max_iterations);

  [[nodiscard]] std::vector<Label> labels() const;
  [[nodiscard]] std::vector<NodeWeight> label_weights() const;
  void restore(std::span<const Label> labels);

  [[nodiscard]] const LabelPropagationStats &stats() const {
    return _stats;
  }
  void enable_weight_audit() {
    _audit_weights = true;
  }
  [[nodiscard]] bool has_work() const {
    return !_queue.empty();
  }

private:
  struct WorkerState {
    std::vector<EdgeWeight> rating;
    std::vector<Label> touched;
    WorkPacket outgoing;
    Random rng;
    NodeID moved = 0;
    EdgeID touched_edges = 0;
  };

  bool try_reserve(Label label, NodeWeight weight);
  void process(NodeID v, WorkerState &state);
  void activate_neighbors(NodeID v, WorkerState &state);

  const Graph &_graph;
  WorkerPool &_pool;
  NodeWeight _bound;
  std::uint64_t _seed;
  EdgeID _packet_bound;
  std::uint32_t _round = 0;

  std::unique_ptr<std::atomic<Label>[]> _labels;
  std::unique_ptr<std::atomic<NodeWeight>[]> _weights;
  std::unique_ptr<std::atomic<std::uint32_t>[]> _queued_round;
  std::size_t _num_labels;

  ConcurrentQueue<WorkPacket> _queue;
  ConcurrentQueue<WorkPacket> _next_queue;
  std::vector<WorkerState> _workers;

  bool _audit_weights = false;
  LabelPropagationStats _stats;
};

// Cluster ID per vertex (initially C[v] = v), cluster weights indexed by
// cluster ID, and the size bound U.
struct ClusterAssignment {
  std::vector<NodeID> cluster;
  std::vector<NodeWeight> cluster_weight;
  NodeWeight bound = 0;
};

// Throws std::invalid_argument if bound < max vertex weight or iterations == 0.
ClusterAssignment lp_cluster(
    const Graph &graph,
    NodeWeight bound,
    std::size_t iterations,
    std::uint64_t seed,
    WorkerPool &pool,
    LabelPropagationStats *stats = nullptr
);

ClusterAssignment lp_cluster(
    const Graph &graph, NodeWeight bound, std::size_t iterations, std::uint64_t seed, std::size_t workers
);

} // namespace shmpart
