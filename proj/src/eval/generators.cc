/*******************************************************************************
 * @file:   generators.cc
 ******************************************************************************/
#include "shmpart/eval/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "shmpart/random.h"

namespace shmpart::eval {

Graph gen_er(const NodeID n, const double p, const std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (NodeID u = 0; u < n; ++u) {
      for (NodeID v = u + 1; v < n; ++v) {
        edges.push_back({u, v});
      }
    }
    return build_graph(n, edges);
  }
  if (p > 0.0 && n > 1) {
    // Skip over the pairs (v, u), u < v, in row-major order with geometric
    // gaps.
    Random rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1;
    std::int64_t u = -1;
    while (v < n) {
      const double r = uniform(rng);
      u += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (v < n && u >= static_cast<std::int64_t>(v)) {
        u -= static_cast<std::int64_t>(v);
        ++v;
      }
      if (v < n) {
        edges.push_back({static_cast<NodeID>(u), static_cast<NodeID>(v)});
      }
    }
  }
  return build_graph(n, edges);
}

double rgg_default_radius(const NodeID n) {
  if (n < 2) {
    return 1.0;
  }
  const double dn = static_cast<double>(n);
  return 0.55 * std::sqrt(std::log(dn) / dn);
}

Graph gen_rgg(const NodeID n, const double radius, const std::uint64_t seed) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("radius must be positive");
  }
  Random rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (NodeID v = 0; v < n; ++v) {
    x[v] = uniform(rng);
    y[v] = uniform(rng);
  }

  const auto cells_per_side =
      static_cast<std::size_t>(std::clamp(std::floor(1.0 / radius), 1.0, std::max(1.0, std::sqrt(double(n)))));
  const auto cell_of = [&](const double coordinate) {
    return std::min(cells_per_side - 1, static_cast<std::size_t>(coordinate * cells_per_side));
  };
  std::vector<std::vector<NodeID>> cells(cells_per_side * cells_per_side);
  for (NodeID v = 0; v < n; ++v) {
    cells[cell_of(x[v]) * cells_per_side + cell_of(y[v])].push_back(v);
  }

  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (NodeID v = 0; v < n; ++v) {
    const std::size_t cx = cell_of(x[v]);
    const std::size_t cy = cell_of(y[v]);
    for (std::size_t nx = (cx == 0 ? 0 : cx - 1); nx <= std::min(cells_per_side - 1, cx + 1); ++nx) {
      for (std::size_t ny = (cy == 0 ? 0 : cy - 1); ny <= std::min(cells_per_side - 1, cy + 1); ++ny) {
        for (const NodeID u : cells[nx * cells_per_side + ny]) {
          if (u <= v) {
            continue;
          }
          const double dx = x[u] - x[v];
          const double dy = y[u] - y[v];
          if (dx * dx + dy * dy < r2) {
            edges.push_back({v, u});
          }
        }
      }
    }
  }
  return build_graph(n, edges);
}

Graph gen_rgg(const NodeID n, const std::uint64_t seed) {
  return gen_rgg(n, rgg_default_radius(n), seed);
}

Graph gen_grid(const NodeID rows, const NodeID cols, const bool wrap) {
  const auto id = [&](const NodeID r, const NodeID c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (NodeID r = 0; r < rows; ++r) {
    for (NodeID c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        edges.push_back({id(r, c), id(r, c + 1)});
      } else if (wrap && cols >= 3) {
        edges.push_back({id(r, c), id(r, 0)});
      }
      if (r + 1 < rows) {
        edges.push_back({id(r, c), id(r + 1, c)});
      } else if (wrap && rows >= 3) {
        edges.push_back({id(r, c), id(0, c)});
      }
    }
  }
  return build_graph(rows * cols, edges);
}

} // namespace shmpart::eval
