/*******************************************************************************
 * @file:   bisection.cc
 ******************************************************************************/
#include "shmpart/initial/bisection.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "shmpart/datastructures/binary_heap.h"
#include "shmpart/random.h"

namespace shmpart {
namespace {
NodeWeight share_bound(const NodeWeight total, const BlockID part, const BlockID parts, const double epsilon) {
  const NodeWeight share = (total * part + parts - 1) / parts;
  const double bound = (1.0 + epsilon) * static_cast<double>(share);
  return static_cast<NodeWeight>(std::floor(bound + 1e-12 * std::max(1.0, bound)));
}

EdgeWeight bisection_cut(const Graph &graph, const std::vector<std::uint8_t> &side) {
  EdgeWeight cut = 0;
  for (NodeID v = 0; v < graph.n(); ++v) {
    graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
      if (v < u && side[v] != side[u]) {
        cut += w;
      }
    });
  }
  return cut;
}

auto rank(const Bisection &b, const BisectionBounds &bounds) {
  return std::make_tuple(bisection_overload(b.weight, bounds), b.cut);
}
} // namespace

NodeWeight bisection_overload(const std::array<NodeWeight, 2> &weight, const BisectionBounds &bounds) {
  return std::max<NodeWeight>(0, weight[0] - bounds.max_weight[0]) +
         std::max<NodeWeight>(0, weight[1] - bounds.max_weight[1]);
}

BisectionBounds
proportional_bounds(const NodeWeight total_weight, const BlockID k0, const BlockID k1, const double epsilon) {
  if (k0 == 0 || k1 == 0) {
    throw std::invalid_argument("both sides of a bisection need at least one block");
  }
  BisectionBounds bounds;
  bounds.target0 = (total_weight * k0 + (k0 + k1) - 1) / (k0 + k1);
  bounds.max_weight[0] = share_bound(total_weight, k0, k0 + k1, epsilon);
  bounds.max_weight[1] = share_bound(total_weight, k1, k0 + k1, epsilon);
  return bounds;
}

Bisection grow_bisection(
    const Graph &graph, const NodeID start, const BisectionBounds &bounds, std::span<const NodeID> fallback_order
) {
  const NodeID n = graph.n();
  Bisection result;
  result.side.assign(n, 1);
  result.weight = {0, graph.total_vertex_weight()};

  std::vector<bool> visited(n, false);
  std::deque<NodeID> frontier{start};
  visited[start] = true;
  std::size_t fallback = 0;

  while (result.weight[0] < bounds.target0) {
    if (frontier.empty()) {
      while (fallback < fallback_order.size() && visited[fallback_order[fallback]]) {
        ++fallback;
      }
      if (fallback == fallback_order.size()) {
        break;
      }
      visited[fallback_order[fallback]] = true;
      frontier.push_back(fallback_order[fallback]);
    }
    const NodeID v = frontier.front();
    frontier.pop_front();
    const NodeWeight c = graph.vertex_weight(v);
    if (result.weight[0] + c > bounds.max_weight[0] && result.weight[0] > 0) {
      continue;
    }
    result.side[v] = 0;
    result.weight[0] += c;
    result.weight[1] -= c;
    for (const NodeID u : graph.neighbors(v)) {
      if (!visited[u]) {
        visited[u] = true;
        frontier.push_back(u);
      }
    }
  }

  result.cut = bisection_cut(graph, result.side);
  result.feasible = bisection_overload(result.weight, bounds) == 0;
  return result;
}

bool fm_refine_bisection(
    const Graph &graph, Bisection &bisection, const BisectionBounds &bounds, const std::size_t max_passes
) {
  const NodeID n = graph.n();
  std::array<AddressableMaxHeap<NodeID, EdgeWeight>, 2> heaps{
      AddressableMaxHeap<NodeID, EdgeWeight>(n), AddressableMaxHeap<NodeID, EdgeWeight>(n)
  };
  const NodeWeight slack = graph.max_vertex_weight();
  std::vector<NodeID> moves;
  moves.reserve(n);
  bool improved_any = false;

  auto &side = bisection.side;
  auto &weight = bisection.weight;

  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    for (NodeID v = 0; v < n; ++v) {
      EdgeWeight gain = 0;
      graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
        gain += (side[u] == side[v]) ? -w : w;
      });
      heaps[side[v]].push(v, gain);
    }

    const auto start_rank = rank(bisection, bounds);
    auto best_rank = start_rank;
    std::size_t best_prefix = 0;
    moves.clear();

    for (;;) {
      const bool over0 = weight[0] > bounds.max_weight[0];
      const bool over1 = weight[1] > bounds.max_weight[1];
      const auto allowed = [&](const int from) {
        if (heaps[from].empty()) {
          return false;
        }
        const int to = 1 - from;
        if (weight[from] > bounds.max_weight[from]) {
          return true;
        }
        return weight[to] + graph.vertex_weight(heaps[from].top()) <= bounds.max_weight[to] + slack;
      };

      int from = -1;
      if (over0 != over1) {
        from = over0 ? 0 : 1;
        if (heaps[from].empty()) {
          break;
        }
      } else {
        const bool a0 = allowed(0);
        const bool a1 = allowed(1);
        if (a0 && a1) {
          const EdgeWeight g0 = heaps[0].top_key();
          const EdgeWeight g1 = heaps[1].top_key();
          if (g0 != g1) {
            from = g0 > g1 ? 0 : 1;
          } else {
            from = (weight[0] - bounds.max_weight[0] >= weight[1] - bounds.max_weight[1]) ? 0 : 1;
          }
        } else if (a0 || a1) {
          from = a0 ? 0 : 1;
        } else {
          break;
        }
      }

      const int to = 1 - from;
      const EdgeWeight gain = heaps[from].top_key();
      const NodeID v = heaps[from].pop();
      side[v] = static_cast<std::uint8_t>(to);
      weight[from] -= graph.vertex_weight(v);
      weight[to] += graph.vertex_weight(v);
      bisection.cut -= gain;
      moves.push_back(v);

      graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
        auto &heap = heaps[side[u]];
        if (heap.contains(u)) {
          heap.change_key(u, heap.key(u) + (side[u] == from ? 2 * w : -2 * w));
        }
      });

      const auto current = rank(bisection, bounds);
      if (current < best_rank) {
        best_rank = current;
        best_prefix = moves.size();
      }
    }

    for (std::size_t i = moves.size(); i > best_prefix; --i) {
      const NodeID v = moves[i - 1];
      const int from = side[v];
      side[v] = static_cast<std::uint8_t>(1 - from);
      weight[from] -= graph.vertex_weight(v);
      weight[1 - from] += graph.vertex_weight(v);
    }
    heaps[0].clear();
    heaps[1].clear();
    bisection.cut = std::get<1>(best_rank);

    if (!(best_rank < start_rank)) {
      break;
    }
    improved_any = true;
  }

  bisection.feasible = bisection_overload(weight, bounds) == 0;
  return improved_any;
}

Bisection
bisect(const Graph &graph, const BisectionBounds &bounds, const std::uint64_t seed, const BisectionConfig &config) {
  const NodeID n = graph.n();
  if (n < 2) {
    throw std::invalid_argument("bisection requires at least two vertices");
  }
  Random rng(seed);
  std::vector<NodeID> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  const std::size_t attempts = std::clamp<std::size_t>(config.growing_attempts, 1, n);
  Bisection best;
  bool have_best = false;
  for (std::size_t a = 0; a < attempts; ++a) {
    Bisection candidate = grow_bisection(graph, order[a], bounds, order);
    fm_refine_bisection(graph, candidate, bounds, config.fm_passes);
    if (!have_best || rank(candidate, bounds) < rank(best, bounds)) {
      best = std::move(candidate);
      have_best = true;
    }
  }
  return best;
}

Bisection bisect(const Graph &graph, const double epsilon, const std::uint64_t seed) {
  return bisect(graph, proportional_bounds(graph.total_vertex_weight(), 1, 1, epsilon), seed);
}

} // namespace shmpart
