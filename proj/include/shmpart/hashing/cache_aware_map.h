/*******************************************************************************
 * Open-addressing hash map with linear probing and locality-preserving
 * tabulation hashing. Keys that differ only in their low bits are stored close
 * to each other, which makes the map behave like a sparse array for clustered
 * key accesses.
 *
 * The all-ones key is reserved as the empty-slot sentinel. Only clear-all is
 * supported; it runs in O(size) by walking a journal of occupied slots.
 *
 * @file:   cache_aware_map.h
 ******************************************************************************/
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "shmpart/hashing/tabular_hash.h"

namespace shmpart {

template <typename Key, typename Value> class CacheAwareMap {
  static_assert(std::is_unsigned_v<Key>, "keys must be unsigned integers");

public:
  static constexpr Key kEmptyKey = std::numeric_limits<Key>::max();
  static constexpr std::size_t kMinCapacity = 64;

  explicit CacheAwareMap(
      const std::size_t initial_capacity = kMinCapacity,
      std::shared_ptr<const TabularHasher> hasher = nullptr
  )
      : _hasher(hasher ? std::move(hasher) : default_hasher()) {
    allocate(round_capacity(initial_capacity));
  }

  // Inserts (key, value) or replaces the stored value by combine(old, value).
  template <typename Combine> void upsert(const Key key, const Value value, Combine &&combine) {
    if (key == kEmptyKey) {
      throw std::invalid_argument("the all-ones key is reserved");
    }
    std::size_t slot = find_slot(key);
    if (_keys[slot] == key) {
      _values[slot] = combine(_values[slot], value);
      return;
    }
    if (2 * (_size + 1) > capacity()) {
      grow();
      slot = find_slot(key);
    }
    _keys[slot] = key;
    _values[slot] = value;
    _journal.push_back(slot);
    ++_size;
  }

  void insert_or_assign(const Key key, const Value value) {
    upsert(key, value, [](const Value &, const Value &v) { return v; });
  }

  void add(const Key key, const Value value) {
    upsert(key, value, [](const Value &a, const Value &b) { return a + b; });
  }

  [[nodiscard]] std::optional<Value> lookup(const Key key) const {
    if (key == kEmptyKey) {
      return std::nullopt;
    }
    const std::size_t slot = find_slot(key);
    if (_keys[slot] == key) {
      return _values[slot];
    }
    return std::nullopt;
  }

  [[nodiscard]] bool contains(const Key key) const {
    return lookup(key).has_value();
  }

  void clear() {
    for (const std::size_t slot : _journal) {
      _keys[slot] = kEmptyKey;
    }
    _journal.clear();
    _size = 0;
  }

  // Visits entries in insertion order.
  template <typename Lambda> void for_each(Lambda &&lambda) const {
    for (const std::size_t slot : _journal) {
      lambda(_keys[slot], _values[slot]);
    }
  }

  [[nodiscard]] std::size_t size() const {
    return _size;
  }
  [[nodiscard]] bool empty() const {
    return _size == 0;
  }
  [[nodiscard]] std::size_t capacity() const {
    return _keys.size();
  }
  [[nodiscard]] const TabularHasher &hasher() const {
    return *_hasher;
  }

private:
  static std::shared_ptr<const TabularHasher> default_hasher() {
    static const auto shared =
        std::make_shared<const TabularHasher>(TabularHashConfig{}, sizeof(Key) * 8);
    return shared;
  }

  static std::size_t round_capacity(const std::size_t requested) {
    if (requested > (std::size_t{1} << (std::numeric_limits<std::size_t>::digits - 2))) {
      throw std::length_error("hash map capacity exceeds the address space");
    }
    return std::bit_ceil(std::max(requested, kMinCapacity));
  }

  void allocate(const std::size_t capacity) {
    _keys.assign(capacity, kEmptyKey);
    _values.resize(capacity);
    _mask = capacity - 1;
  }

  [[nodiscard]] std::size_t find_slot(const Key key) const {
    std::size_t slot = (*_hasher)(key) & _mask;
    while (_keys[slot] != kEmptyKey && _keys[slot] != key) {
      slot = (slot + 1) & _mask;
    }
    return slot;
  }

  void grow() {
    if (capacity() > (std::size_t{1} << (std::numeric_limits<std::size_t>::digits - 3))) {
      throw std::length_error("hash map capacity exceeds the address space");
    }
    std::vector<Key> old_keys = std::move(_keys);
    std::vector<Value> old_values = std::move(_values);
    std::vector<std::size_t> old_journal = std::move(_journal);
    allocate(old_keys.size() * 2);
    _journal.clear();
    _journal.reserve(old_journal.size());
    for (const std::size_t old_slot : old_journal) {
      const std::size_t slot = find_slot(old_keys[old_slot]);
      _keys[slot] = old_keys[old_slot];
      _values[slot] = std::move(old_values[old_slot]);
      _journal.push_back(slot);
    }
  }

  std::shared_ptr<const TabularHasher> _hasher;
  std::vector<Key> _keys;
  std::vector<Value> _values;
  std::vector<std::size_t> _journal;
  std::size_t _mask = 0;
  std::size_t _size = 0;
};

} // namespace shmpart
