/*******************************************************************************
 * Seed derivation and small random helpers.
 *
 * @file:   random.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <random>

namespace shmpart {

using Random = std::mt19937_64;

// Deterministically derives an independent stream seed from a base seed and
// a tag (phase, worker or attempt index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, const std::uint64_t tag) {
  seed += 0x9e3779b97f4a7c15ull * (tag + 1);
  seed = (seed ^ (seed >> 30)) * 0xbf58476d1ce4e5b9ull;
  seed = (seed ^ (seed >> 27)) * 0x94d049bb133111ebull;
  return seed ^ (seed >> 31);
}

constexpr std::uint64_t
derive_seed(const std::uint64_t seed, const std::uint64_t tag, const std::uint64_t index) {
  return derive_seed(derive_seed(seed, tag), index);
}

// Uniform integer in [0, bound).
inline std::uint64_t random_below(Random &rng, const std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

} // namespace shmpart
