/*******************************************************************************
 * Fork-join worker pool and the parallel primitives built on top of it.
 *
 * @file:   worker_pool.h
 ******************************************************************************/
#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace shmpart {

// A fixed set of threads that execute one job at a time. run() calls the job
// once per worker (the calling thread acts as worker 0) and returns when all
// invocations have finished. The first exception thrown by any worker is
// rethrown by run().
class WorkerPool {
public:
  explicit WorkerPool(std::size_t workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool &) = delete;
  WorkerPool &operator=(const WorkerPool &) = delete;

  [[nodiscard]] std::size_t size() const {
    return _workers;
  }

  void run(const std::function<void(std::size_t)> &job);

private:
  void worker_loop(std::size_t id);

  std::size_t _workers;
  std::vector<std::thread> _threads;

  std::mutex _mutex;
  std::condition_variable _wake;
  std::condition_variable _done;
  const std::function<void(std::size_t)> *_job = nullptr;
  std::size_t _generation = 0;
  std::size_t _pending = 0;
  bool _shutdown = false;
  std::exception_ptr _error;
};

// Dynamic chunked loop over [begin, end). body(first, last, worker).
template <typename Body>
void parallel_for(
    WorkerPool &pool, const std::size_t begin, const std::size_t end, const std::size_t grain,
    Body &&body
) {
  if (begin >= end) {
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(grain, 1);
  if (pool.size() == 1 || end - begin <= chunk) {
    for (std::size_t first = begin; first < end; first += chunk) {
      body(first, std::min(end, first + chunk), std::size_t{0});
    }
    return;
  }
  std::atomic<std::size_t> next{begin};
  pool.run([&](const std::size_t worker) {
    for (;;) {
      const std::size_t first = next.fetch_add(chunk, std::memory_order_relaxed);
      if (first >= end) {
        break;
      }
      body(first, std::min(end, first + chunk), worker);
    }
  });
}

// Exclusive prefix sum in place; returns the total.
template <typename T> T parallel_exclusive_prefix_sum(WorkerPool &pool, std::vector<T> &values) {
  const std::size_t n = values.size();
  const std::size_t parts = std::min<std::size_t>(pool.size(), std::max<std::size_t>(n / 4096, 1));
  std::vector<T> part_sums(parts + 1, T{0});
  const auto part_begin = [&](const std::size_t p) { return n * p / parts; };

  const auto local_sums = [&](const std::size_t p) {
    T sum{0};
    for (std::size_t i = part_begin(p); i < part_begin(p + 1); ++i) {
      sum += values[i];
    }
    part_sums[p + 1] = sum;
  };
  const auto scan = [&](const std::size_t p) {
    T running = part_sums[p];
    for (std::size_t i = part_begin(p); i < part_begin(p + 1); ++i) {
      const T value = values[i];
      values[i] = running;
      running += value;
    }
  };

  if (parts == 1) {
    local_sums(0);
    scan(0);
    return part_sums[1];
  }
  pool.run([&](const std::size_t worker) {
    if (worker < parts) {
      local_sums(worker);
    }
  });
  for (std::size_t p = 0; p < parts; ++p) {
    part_sums[p + 1] += part_sums[p];
  }
  pool.run([&](const std::size_t worker) {
    if (worker < parts) {
      scan(worker);
    }
  });
  return part_sums[parts];
}

// Multiple-producer multiple-consumer FIFO.
template <typename T> class ConcurrentQueue {
public:
  void push(T value) {
    std::lock_guard lock(_mutex);
    _items.push_back(std::move(value));
  }

  std::optional<T> try_pop() {
    std::lock_guard lock(_mutex);
    if (_items.empty()) {
      return std::nullopt;
    }
    T value = std::move(_items.front());
    _items.pop_front();
    return value;
  }

  [[nodiscard]] bool empty() const {
    std::lock_guard lock(_mutex);
    return _items.empty();
  }

  [[nodiscard]] std::size_t size() const {
    std::lock_guard lock(_mutex);
    return _items.size();
  }

  void swap(ConcurrentQueue &other) {
    std::scoped_lock lock(_mutex, other._mutex);
    _items.swap(other._items);
  }

private:
  mutable std::mutex _mutex;
  std::deque<T> _items;
};

} // namespace shmpart
