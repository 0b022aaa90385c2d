/*******************************************************************************
 * Immutable undirected graph in compressed sparse row form.
 *
 * Every undirected edge {u, v} is stored twice, once in the adjacency of u and
 * once in the adjacency of v. Neighborhoods are sorted by target ID.
 *
 * @file:   graph.h
 ******************************************************************************/
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shmpart/definitions.h"

namespace shmpart {

struct Edge {
  NodeID u;
  NodeID v;
  EdgeWeight weight = 1;
};

class Graph {
public:
  Graph() = default;

  // Takes ownership of CSR arrays. The caller guarantees symmetry, no
  // self-loops and no parallel edges; use build_graph() for untrusted input.
  Graph(
      std::vector<EdgeID> offsets,
      std::vector<NodeID> targets,
      std::vector<EdgeWeight> edge_weights,
      std::vector<NodeWeight> vertex_weights
  );

  [[nodiscard]] NodeID n() const {
    return static_cast<NodeID>(_vertex_weights.size());
  }
  // Number of undirected edges.
  [[nodiscard]] EdgeID m() const {
    return _targets.size() / 2;
  }
  [[nodiscard]] EdgeID half_edges() const {
    return _targets.size();
  }

  [[nodiscard]] NodeID degree(const NodeID v) const {
    return static_cast<NodeID>(_offsets[v + 1] - _offsets[v]);
  }
  [[nodiscard]] std::span<const NodeID> neighbors(const NodeID v) const {
    return {_targets.data() + _offsets[v], _targets.data() + _offsets[v + 1]};
  }
  [[nodiscard]] std::span<const EdgeWeight> incident_weights(const NodeID v) const {
    return {_edge_weights.data() + _offsets[v], _edge_weights.data() + _offsets[v + 1]};
  }

  template <typename Lambda> void for_each_neighbor(const NodeID v, Lambda &&lambda) const {
    for (EdgeID e = _offsets[v]; e < _offsets[v + 1]; ++e) {
      lambda(_targets[e], _edge_weights[e]);
    }
  }

  [[nodiscard]] NodeWeight vertex_weight(const NodeID v) const {
    return _vertex_weights[v];
  }
  [[nodiscard]] NodeWeight total_vertex_weight() const {
    return _total_vertex_weight;
  }
  [[nodiscard]] NodeWeight max_vertex_weight() const {
    return _max_vertex_weight;
  }
  [[nodiscard]] EdgeWeight total_edge_weight() const {
    return _total_edge_weight;
  }
  [[nodiscard]] NodeID max_degree() const {
    return _max_degree;
  }

  [[nodiscard]] bool has_unit_vertex_weights() const;
  [[nodiscard]] bool has_unit_edge_weights() const;

  [[nodiscard]] std::span<const EdgeID> raw_offsets() const {
    return _offsets;
  }
  [[nodiscard]] std::span<const NodeID> raw_targets() const {
    return _targets;
  }
  [[nodiscard]] std::span<const EdgeWeight> raw_edge_weights() const {
    return _edge_weights;
  }
  [[nodiscard]] std::span<const NodeWeight> raw_vertex_weights() const {
    return _vertex_weights;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<EdgeID> _offsets{0};
  std::vector<NodeID> _targets;
  std::vector<EdgeWeight> _edge_weights;
  std::vector<NodeWeight> _vertex_weights;

  NodeWeight _total_vertex_weight = 0;
  NodeWeight _max_vertex_weight = 0;
  EdgeWeight _total_edge_weight = 0;
  NodeID _max_degree = 0;
};

// Builds a graph from an undirected edge list. Parallel edges are merged by
// summing their weights. Throws std::invalid_argument on self-loops,
// out-of-range endpoints and non-positive weights.
Graph build_graph(
    NodeID n,
    std::span<const Edge> edges,
    std::optional<std::span<const NodeWeight>> vertex_weights = std::nullopt
);

// Subgraph induced by `vertices`; local vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph &graph, std::span<const NodeID> vertices);

// Checks the structural invariants; returns an empty string if all hold,
// otherwise a description of the first violation.
std::string check_graph_invariants(const Graph &graph);

} // namespace shmpart
