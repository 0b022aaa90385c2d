/*******************************************************************************
 * Seeded synthetic graph generators with unit weights.
 *
 * @file:   generators.h
 ******************************************************************************/
#pragma once

#include <cstdint>

#include "shmpart/graph.h"

namespace shmpart::eval {

// G(n, p): every pair is an edge independently with probability p.
Graph gen_er(NodeID n, double p, std::uint64_t seed);

// 0.55 * sqrt(ln n / n).
double rgg_default_radius(NodeID n);

// n uniform points in the unit square; edges between points closer than
// `radius`.
Graph gen_rgg(NodeID n, double radius, std::uint64_t seed);
Graph gen_rgg(NodeID n, std::uint64_t seed);

// rows x cols lattice with 4-neighborhoods; a torus if `wrap`. Wrap-around
// edges are only added along dimensions of length at least 3.
Graph gen_grid(NodeID rows, NodeID cols, bool wrap);

} // namespace shmpart::eval
