/*******************************************************************************
 * Addressable binary max-heap over dense element IDs.
 *
 * @file:   binary_heap.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shmpart {

template <typename ID, typename Key> class AddressableMaxHeap {
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

public:
  explicit AddressableMaxHeap(const std::size_t capacity = 0) : _position(capacity, kAbsent) {}

  void resize(const std::size_t capacity) {
    clear();
    _position.assign(capacity, kAbsent);
  }

  [[nodiscard]] bool empty() const {
    return _heap.empty();
  }
  [[nodiscard]] std::size_t size() const {
    return _heap.size();
  }
  [[nodiscard]] bool contains(const ID id) const {
    return _position[id] != kAbsent;
  }
  [[nodiscard]] Key key(const ID id) const {
    return _heap[_position[id]].second;
  }
  [[nodiscard]] ID top() const {
    return _heap.front().first;
  }
  [[nodiscard]] Key top_key() const {
    return _heap.front().second;
  }

  void push(const ID id, const Key key) {
    if (contains(id)) {
      throw std::logic_error("element already in heap");
    }
    _position[id] = _heap.size();
    _heap.emplace_back(id, key);
    sift_up(_heap.size() - 1);
  }

  void change_key(const ID id, const Key key) {
    const std::size_t pos = _position[id];
    const Key old = _heap[pos].second;
    _heap[pos].second = key;
    if (key > old) {
      sift_up(pos);
    } else if (key < old) {
      sift_down(pos);
    }
  }

  ID pop() {
    const ID id = _heap.front().first;
    remove(id);
    return id;
  }

  void remove(const ID id) {
    const std::size_t pos = _position[id];
    _position[id] = kAbsent;
    if (pos + 1 == _heap.size()) {
      _heap.pop_back();
      return;
    }
    _heap[pos] = _heap.back();
    _heap.pop_back();
    const ID moved = _heap[pos].first;
    _position[moved] = pos;
    sift_up(pos);
    sift_down(_position[moved]);
  }

  void clear() {
    for (const auto &[id, key] : _heap) {
      _position[id] = kAbsent;
    }
    _heap.clear();
  }

private:
  void swap_entries(const std::size_t a, const std::size_t b) {
    std::swap(_heap[a], _heap[b]);
    _position[_heap[a].first] = a;
    _position[_heap[b].first] = b;
  }

  void sift_up(std::size_t pos) {
    while (pos > 0) {
      const std::size_t parent = (pos - 1) / 2;
      if (!(_heap[parent].second < _heap[pos].second)) {
        break;
      }
      swap_entries(parent, pos);
      pos = parent;
    }
  }

  void sift_down(std::size_t pos) {
    for (;;) {
      const std::size_t left = 2 * pos + 1;
      if (left >= _heap.size()) {
        break;
      }
      std::size_t child = left;
      if (left + 1 < _heap.size() && _heap[left].second < _heap[left + 1].second) {
        child = left + 1;
      }
      if (!(_heap[pos].second < _heap[child].second)) {
        break;
      }
      swap_entries(pos, child);
      pos = child;
    }
  }

  std::vector<std::pair<ID, Key>> _heap;
  std::vector<std::size_t> _position;
};

} // namespace shmpart
