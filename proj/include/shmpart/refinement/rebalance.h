/*******************************************************************************
 * Greedy rebalancing of overloaded blocks.
 *
 * @file:   rebalance.h
 ******************************************************************************/
#pragma once

#include "shmpart/graph.h"
#include "shmpart/partition.h"

namespace shmpart {

// Moves vertices out of blocks heavier than the bound, each time picking the
// move with the largest gain among targets that stay within the bound. Blocks
// that are not overloaded never become overloaded. Returns true if the
// partition is balanced afterwards.
bool rebalance(const Graph &graph, Partition &partition);

} // namespace shmpart
