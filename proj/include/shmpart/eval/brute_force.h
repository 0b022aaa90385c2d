/*******************************************************************************
 * Exhaustive minimum balanced cut for tiny instances.
 *
 * @file:   brute_force.h
 ******************************************************************************/
#pragma once

#include <optional>
#include <vector>

#include "shmpart/graph.h"

namespace shmpart::eval {

struct BruteForceResult {
  EdgeWeight cut = 0;
  std::vector<BlockID> witness;
};

// Enumerates all assignments with every block weight <= floor(L_max).
// Returns nullopt if no balanced assignment exists. Throws
// std::invalid_argument if k^n > 10^7 or k == 0.
std::optional<BruteForceResult> brute_force_optimal(const Graph &graph, BlockID k, double epsilon);

} // namespace shmpart::eval
