/*******************************************************************************
 * @file:   graph.cc
 ******************************************************************************/
#include "shmpart/graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace shmpart {

Graph::Graph(
    std::vector<EdgeID> offsets,
    std::vector<NodeID> targets,
    std::vector<EdgeWeight> edge_weights,
    std::vector<NodeWeight> vertex_weights
)
    : _offsets(std::move(offsets)),
      _targets(std::move(targets)),
      _edge_weights(std::move(edge_weights)),
      _vertex_weights(std::move(vertex_weights)) {
  if (_offsets.size() != _vertex_weights.size() + 1 || _targets.size() != _edge_weights.size() ||
      _offsets.back() != _targets.size()) {
    throw std::invalid_argument("inconsistent CSR array sizes");
  }

  for (const NodeWeight w : _vertex_weights) {
    _total_vertex_weight += w;
    _max_vertex_weight = std::max(_max_vertex_weight, w);
  }
  _total_edge_weight = std::accumulate(_edge_weights.begin(), _edge_weights.end(), EdgeWeight{0}) / 2;
  for (NodeID v = 0; v < n(); ++v) {
    _max_degree = std::max(_max_degree, degree(v));
  }
}

bool Graph::has_unit_vertex_weights() const {
  return std::all_of(_vertex_weights.begin(), _vertex_weights.end(), [](const NodeWeight w) {
    return w == 1;
  });
}

bool Graph::has_unit_edge_weights() const {
  return std::all_of(_edge_weights.begin(), _edge_weights.end(), [](const EdgeWeight w) {
    return w == 1;
  });
}

Graph build_graph(
    const NodeID n,
    std::span<const Edge> edges,
    std::optional<std::span<const NodeWeight>> vertex_weights
) {
  std::vector<NodeWeight> weights(n, 1);
  if (vertex_weights) {
    if (vertex_weights->size() != n) {
      throw std::invalid_argument("vertex weight count does not match n");
    }
    for (NodeID v = 0; v < n; ++v) {
      if ((*vertex_weights)[v] <= 0) {
        throw std::invalid_argument("vertex weights must be positive");
      }
      weights[v] = (*vertex_weights)[v];
    }
  }

  std::vector<EdgeID> degree(n + 1, 0);
  for (const Edge &edge : edges) {
    if (edge.u >= n || edge.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    if (edge.weight <= 0) {
      throw std::invalid_argument("edge weights must be positive");
    }
    ++degree[edge.u];
    ++degree[edge.v];
  }

  // bucket half-edges by source, then sort and merge each bucket
  std::vector<EdgeID> start(n + 1, 0);
  std::partial_sum(degree.begin(), degree.end() - 1, start.begin() + 1);
  std::vector<std::pair<NodeID, EdgeWeight>> half(start[n]);
  std::vector<EdgeID> fill(start.begin(), start.end() - 1);
  for (const Edge &edge : edges) {
    half[fill[edge.u]++] = {edge.v, edge.weight};
    half[fill[edge.v]++] = {edge.u, edge.weight};
  }

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  targets.reserve(half.size());
  edge_weights.reserve(half.size());

  for (NodeID v = 0; v < n; ++v) {
    auto first = half.begin() + static_cast<std::ptrdiff_t>(start[v]);
    auto last = half.begin() + static_cast<std::ptrdiff_t>(start[v + 1]);
    std::sort(first, last, [](const auto &a, const auto &b) { return a.first < b.first; });
    for (auto it = first; it != last; ++it) {
      if (!targets.empty() && targets.size() > offsets[v] && targets.back() == it->first) {
        edge_weights.back() += it->second;
      } else {
        targets.push_back(it->first);
        edge_weights.push_back(it->second);
      }
    }
    offsets[v + 1] = targets.size();
  }

  return {std::move(offsets), std::move(targets), std::move(edge_weights), std::move(weights)};
}

Graph induced_subgraph(const Graph &graph, std::span<const NodeID> vertices) {
  std::unordered_map<NodeID, NodeID> to_local;
  to_local.reserve(vertices.size());
  for (NodeID i = 0; i < vertices.size(); ++i) {
    to_local.emplace(vertices[i], i);
  }

  std::vector<EdgeID> offsets(vertices.size() + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> edge_weights;
  std::vector<NodeWeight> vertex_weights(vertices.size());

  for (NodeID i = 0; i < vertices.size(); ++i) {
    const NodeID v = vertices[i];
    vertex_weights[i] = graph.vertex_weight(v);
    graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
      if (auto it = to_local.find(u); it != to_local.end()) {
        targets.push_back(it->second);
        edge_weights.push_back(w);
      }
    });
    // local IDs need not be monotone in global IDs
    auto first = static_cast<std::ptrdiff_t>(offsets[i]);
    std::vector<std::pair<NodeID, EdgeWeight>> row;
    for (auto e = static_cast<std::size_t>(first); e < targets.size(); ++e) {
      row.emplace_back(targets[e], edge_weights[e]);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t j = 0; j < row.size(); ++j) {
      targets[first + j] = row[j].first;
      edge_weights[first + j] = row[j].second;
    }
    offsets[i + 1] = targets.size();
  }

  return {std::move(offsets), std::move(targets), std::move(edge_weights), std::move(vertex_weights)};
}

std::string check_graph_invariants(const Graph &graph) {
  std::ostringstream out;
  for (NodeID v = 0; v < graph.n(); ++v) {
    if (graph.vertex_weight(v) <= 0) {
      out << "vertex " << v << " has non-positive weight";
      return out.str();
    }
    const auto nbrs = graph.neighbors(v);
    const auto weights = graph.incident_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeID u = nbrs[i];
      if (u >= graph.n()) {
        out << "vertex " << v << " has out-of-range neighbor " << u;
        return out.str();
      }
      if (u == v) {
        out << "self-loop at " << v;
        return out.str();
      }
      if (i > 0 && nbrs[i - 1] >= u) {
        out << "neighborhood of " << v << " is not strictly sorted";
        return out.str();
      }
      if (weights[i] <= 0) {
        out << "edge (" << v << "," << u << ") has non-positive weight";
        return out.str();
      }
      const auto back = graph.neighbors(u);
      const auto it = std::lower_bound(back.begin(), back.end(), v);
      if (it == back.end() || *it != v ||
          graph.incident_weights(u)[static_cast<std::size_t>(it - back.begin())] != weights[i]) {
        out << "edge (" << v << "," << u << ") has no matching reverse edge";
        return out.str();
      }
    }
  }
  return {};
}

} // namespace shmpart
