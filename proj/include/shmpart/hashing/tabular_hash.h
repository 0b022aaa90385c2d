/*******************************************************************************
 * Locality-preserving tabulation hashing.
 *
 * A key is split into a pass-through low chunk of `low_bits` bits and
 * `chunk_bits`-wide high chunks. Each high chunk indexes a table of random
 * 32-bit integers; the hash is the XOR of the looked-up entries and the low
 * chunk:
 *
 *   h(x) = T_1[x_1] ^ ... ^ T_{c-1}[x_{c-1}] ^ x_c
 *
 * Keys that agree on all bits above the low chunk therefore land in the same
 * 2^low_bits-aligned window of the hash space, i.e. on the same cache line
 * once slots are addressed by the hash.
 *
 * @file:   tabular_hash.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace shmpart {

struct TabularHashConfig {
  unsigned chunk_bits = 10;
  unsigned low_bits = 5;
  // Total number of chunks including the pass-through one.
  unsigned chunks = 3;
  std::uint64_t seed = 0x5eed;
};

class TabularHasher {
public:
  TabularHasher() : TabularHasher(TabularHashConfig{}) {}

  // Keys wider than low_bits + (chunks - 1) * chunk_bits get additional tables
  // so no key bits are dropped.
  explicit TabularHasher(const TabularHashConfig &config, unsigned key_bits = 0)
      : _chunk_bits(config.chunk_bits),
        _low_bits(config.low_bits),
        _seed(config.seed) {
    if (_chunk_bits == 0 || _chunk_bits > 20 || _low_bits > 31 || config.chunks < 1) {
      throw std::invalid_argument("invalid tabular hash configuration");
    }
    unsigned tables = config.chunks - 1;
    const unsigned covered = _low_bits + tables * _chunk_bits;
    if (key_bits > covered) {
      tables += (key_bits - covered + _chunk_bits - 1) / _chunk_bits;
    }
    _num_tables = tables;

    std::mt19937 rng(static_cast<std::uint32_t>(_seed ^ (_seed >> 32)));
    _tables.resize(static_cast<std::size_t>(_num_tables) << _chunk_bits);
    for (auto &entry : _tables) {
      entry = static_cast<std::uint32_t>(rng());
    }
  }

  [[nodiscard]] std::uint32_t operator()(const std::uint64_t key) const {
    std::uint32_t h = static_cast<std::uint32_t>(key & low_mask());
    std::uint64_t rest = key >> _low_bits;
    const std::uint64_t chunk_mask = (std::uint64_t{1} << _chunk_bits) - 1;
    for (unsigned i = 0; i < _num_tables; ++i) {
      h ^= _tables[(static_cast<std::size_t>(i) << _chunk_bits) | (rest & chunk_mask)];
      rest >>= _chunk_bits;
    }
    // bits beyond the covered width are mixed in rather than dropped
    if (rest != 0) {
      h ^= static_cast<std::uint32_t>((rest * 0x9e3779b97f4a7c15ull) >> 32);
    }
    return h;
  }

  [[nodiscard]] unsigned chunk_bits() const {
    return _chunk_bits;
  }
  [[nodiscard]] unsigned low_bits() const {
    return _low_bits;
  }
  [[nodiscard]] unsigned num_tables() const {
    return _num_tables;
  }
  [[nodiscard]] unsigned key_bits() const {
    return _low_bits + _num_tables * _chunk_bits;
  }
  [[nodiscard]] std::uint32_t table_entry(const unsigned table, const std::uint32_t index) const {
    return _tables[(static_cast<std::size_t>(table) << _chunk_bits) | index];
  }

private:
  [[nodiscard]] std::uint64_t low_mask() const {
    return (std::uint64_t{1} << _low_bits) - 1;
  }

  unsigned _chunk_bits;
  unsigned _low_bits;
  unsigned _num_tables = 0;
  std::uint64_t _seed;
  std::vector<std::uint32_t> _tables;
};

} // namespace shmpart
