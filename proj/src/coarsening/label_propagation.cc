/*******************************************************************************
 * @file:   label_propagation.cc
 ******************************************************************************/
#include "shmpart/coarsening/label_propagation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace shmpart {

EdgeID packet_degree_bound(const EdgeID m) {
  const auto root = static_cast<EdgeID>(std::sqrt(static_cast<double>(m)));
  return std::max<EdgeID>(1000, root);
}

std::vector<WorkPacket>
build_packets(std::span<const NodeID> order, const Graph &graph, const EdgeID bound) {
  std::vector<WorkPacket> packets;
  WorkPacket current;
  for (const NodeID v : order) {
    const EdgeID d = graph.degree(v);
    if (!current.vertices.empty() && current.degree_sum + d > bound) {
      packets.push_back(std::move(current));
      current = WorkPacket{};
    }
    current.vertices.push_back(v);
    current.degree_sum += d;
  }
  if (!current.vertices.empty()) {
    packets.push_back(std::move(current));
  }
  return packets;
}

std::vector<WorkPacket> build_packets(std::span<const NodeID> order, const Graph &graph) {
  return build_packets(order, graph, packet_degree_bound(graph.m()));
}

std::vector<NodeID> degree_order(const Graph &graph, const std::uint64_t seed) {
  std::vector<NodeID> order(graph.n());
  std::iota(order.begin(), order.end(), 0);
  Random rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  // counting sort by degree keeps the shuffled order among equal degrees
  std::vector<NodeID> count(graph.max_degree() + 2, 0);
  for (const NodeID v : order) {
    ++count[graph.degree(v) + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<NodeID> sorted(graph.n());
  for (const NodeID v : order) {
    sorted[count[graph.degree(v)]++] = v;
  }
  return sorted;
}

SizeConstrainedLabelPropagation::SizeConstrainedLabelPropagation(
    const Graph &graph,
    WorkerPool &pool,
    std::span<const Label> initial_labels,
    const std::size_t num_labels,
    const NodeWeight bound,
    const std::uint64_t seed
)
    : _graph(graph),
      _pool(pool),
      _bound(bound),
      _seed(seed),
      _packet_bound(packet_degree_bound(graph.m())),
      _labels(std::make_unique<std::atomic<Label>[]>(graph.n())),
      _weights(std::make_unique<std::atomic<NodeWeight>[]>(num_labels)),
      _queued_round(std::make_unique<std::atomic<std::uint32_t>[]>(graph.n())),
      _num_labels(num_labels) {
  if (initial_labels.size() != graph.n()) {
    throw std::invalid_argument("one initial label per vertex required");
  }
  restore(initial_labels);
  for (NodeID v = 0; v < graph.n(); ++v) {
    _queued_round[v].store(0, std::memory_order_relaxed);
  }

  const auto order = degree_order(graph, derive_seed(seed, 0));
  for (auto &packet : build_packets(order, graph, _packet_bound)) {
    _queue.push(std::move(packet));
  }

  _workers.resize(pool.size());
  for (std::size_t w = 0; w < _workers.size(); ++w) {
    _workers[w].rating.assign(num_labels, 0);
    _workers[w].rng.seed(derive_seed(seed, 1, w));
  }
}

void SizeConstrainedLabelPropagation::restore(std::span<const Label> labels) {
  for (std::size_t l = 0; l < _num_labels; ++l) {
    _weights[l].store(0, std::memory_order_relaxed);
  }
  for (NodeID v = 0; v < _graph.n(); ++v) {
    if (labels[v] >= _num_labels) {
      throw std::invalid_argument("label out of range");
    }
    _labels[v].store(labels[v], std::memory_order_relaxed);
    _weights[labels[v]].fetch_add(_graph.vertex_weight(v), std::memory_order_relaxed);
  }
}

std::vector<Label> SizeConstrainedLabelPropagation::labels() const {
  std::vector<Label> result(_graph.n());
  for (NodeID v = 0; v < _graph.n(); ++v) {
    result[v] = _labels[v].load(std::memory_order_relaxed);
  }
  return result;
}

std::vector<NodeWeight> SizeConstrainedLabelPropagation::label_weights() const {
  std::vector<NodeWeight> result(_num_labels);
  for (std::size_t l = 0; l < _num_labels; ++l) {
    result[l] = _weights[l].load(std::memory_order_relaxed);
  }
  return result;
}

bool SizeConstrainedLabelPropagation::try_reserve(const Label label, const NodeWeight weight) {
  NodeWeight current = _weights[label].load(std::memory_order_relaxed);
  while (current + weight <= _bound) {
    if (_weights[label].compare_exchange_weak(
            current, current + weight, std::memory_order_acq_rel, std::memory_order_relaxed
        )) {
      return true;
    }
  }
  return false;
}

void SizeConstrainedLabelPropagation::process(const NodeID v, WorkerState &state) {
  const Label own = _labels[v].load(std::memory_order_relaxed);
  const NodeWeight weight = _graph.vertex_weight(v);

  _graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
    const Label label = _labels[u].load(std::memory_order_relaxed);
    if (state.rating[label] == 0) {
      state.touched.push_back(label);
    }
    state.rating[label] += w;
  });
  state.touched_edges += _graph.degree(v);

  const EdgeWeight own_connection = state.rating[own];
  Label best = own;
  EdgeWeight best_connection = own_connection;
  std::uint64_t ties = 0;
  for (const Label label : state.touched) {
    const EdgeWeight connection = state.rating[label];
    state.rating[label] = 0;
    if (label == own || connection <= own_connection || connection < best_connection) {
      continue;
    }
    if (_weights[label].load(std::memory_order_relaxed) + weight > _bound) {
      continue;
    }
    if (connection > best_connection) {
      best = label;
      best_connection = connection;
      ties = 1;
    } else if (random_below(state.rng, ++ties) == 0) {
      best = label;
    }
  }
  state.touched.clear();

  if (best == own || !try_reserve(best, weight)) {
    return;
  }
  _weights[own].fetch_sub(weight, std::memory_order_acq_rel);
  _labels[v].store(best, std::memory_order_relaxed);
  ++state.moved;
  activate_neighbors(v, state);
}

void SizeConstrainedLabelPropagation::activate_neighbors(const NodeID v, WorkerState &state) {
  const std::uint32_t next_round = _round + 1;
  for (const NodeID u : _graph.neighbors(v)) {
    if (_queued_round[u].exchange(next_round, std::memory_order_relaxed) == next_round) {
      continue;
    }
    const EdgeID d = _graph.degree(u);
    WorkPacket &packet = state.outgoing;
    if (!packet.vertices.empty() && packet.degree_sum + d > _packet_bound) {
      _next_queue.push(std::move(packet));
      packet = WorkPacket{};
    }
    packet.vertices.push_back(u);
    packet.degree_sum += d;
  }
}

NodeID SizeConstrainedLabelPropagation::iterate() {
  if (_queue.empty()) {
    return 0;
  }
  ++_round;

  _pool.run([&](const std::size_t worker) {
    WorkerState &state = _workers[worker];
    state.moved = 0;
    state.touched_edges = 0;
    while (auto packet = _queue.try_pop()) {
      for (const NodeID v : packet->vertices) {
        process(v, state);
      }
    }
    if (!state.outgoing.vertices.empty()) {
      _next_queue.push(std::move(state.outgoing));
      state.outgoing = WorkPacket{};
    }
  });

  NodeID moved = 0;
  EdgeID touched = 0;
  for (const WorkerState &state : _workers) {
    moved += state.moved;
    touched += state.touched_edges;
  }
  _queue.swap(_next_queue);

  _stats.moved_per_iteration.push_back(moved);
  _stats.touched_edges_per_iteration.push_back(touched);
  if (_audit_weights) {
    std::vector<NodeWeight> recomputed(_num_labels, 0);
    for (NodeID v = 0; v < _graph.n(); ++v) {
      recomputed[_labels[v].load(std::memory_order_relaxed)] += _graph.vertex_weight(v);
    }
    _stats.max_label_weight_per_iteration.push_back(
        recomputed.empty() ? 0 : *std::max_element(recomputed.begin(), recomputed.end())
    );
  }
  return moved;
}

void SizeConstrainedLabelPropagation::run(const std::size_t max_iterations) {
  for (std::size_t i = 0; i < max_iterations; ++i) {
    if (iterate() == 0) {
      break;
    }
  }
}

ClusterAssignment lp_cluster(
    const Graph &graph,
    const NodeWeight bound,
    const std::size_t iterations,
    const std::uint64_t seed,
    WorkerPool &pool,
    LabelPropagationStats *stats
) {
  if (iterations == 0) {
    throw std::invalid_argument("at least one label propagation iteration required");
  }
  if (bound < graph.max_vertex_weight()) {
    throw std::invalid_argument("cluster size bound is below the maximum vertex weight");
  }

  std::vector<Label> identity(graph.n());
  std::iota(identity.begin(), identity.end(), 0);
  SizeConstrainedLabelPropagation lp(graph, pool, identity, graph.n(), bound, seed);
  if (stats != nullptr) {
    lp.enable_weight_audit();
  }
  lp.run(iterations);
  if (stats != nullptr) {
    *stats = lp.stats();
  }

  ClusterAssignment result;
  result.cluster = lp.labels();
  result.cluster_weight = lp.label_weights();
  result.bound = bound;
  return result;
}

ClusterAssignment lp_cluster(
    const Graph &graph,
    const NodeWeight bound,
    const std::size_t iterations,
    const std::uint64_t seed,
    const std::size_t workers
) {
  WorkerPool pool(workers);
  return lp_cluster(graph, bound, iterations, seed, pool);
}

} // namespace shmpart
