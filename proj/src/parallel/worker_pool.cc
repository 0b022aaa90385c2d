/*******************************************************************************
 * @file:   worker_pool.cc
 ******************************************************************************/
#include "shmpart/parallel/worker_pool.h"

#include <stdexcept>

namespace shmpart {

WorkerPool::WorkerPool(const std::size_t workers) : _workers(workers) {
  if (workers == 0) {
    throw std::invalid_argument("a worker pool needs at least one worker");
  }
  _threads.reserve(workers - 1);
  for (std::size_t id = 1; id < workers; ++id) {
    _threads.emplace_back([this, id] { worker_loop(id); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(_mutex);
    _shutdown = true;
  }
  _wake.notify_all();
  for (auto &thread : _threads) {
    thread.join();
  }
}

void WorkerPool::run(const std::function<void(std::size_t)> &job) {
  if (_workers == 1) {
    job(0);
    return;
  }

  {
    std::lock_guard lock(_mutex);
    _job = &job;
    _pending = _workers - 1;
    _error = nullptr;
    ++_generation;
  }
  _wake.notify_all();

  std::exception_ptr own_error;
  try {
    job(0);
  } catch (...) {
    own_error = std::current_exception();
  }

  std::unique_lock lock(_mutex);
  _done.wait(lock, [&] { return _pending == 0; });
  _job = nullptr;
  if (own_error) {
    std::rethrow_exception(own_error);
  }
  if (_error) {
    std::rethrow_exception(_error);
  }
}

void WorkerPool::worker_loop(const std::size_t id) {
  std::size_t seen_generation = 0;
  for (;;) {
    const std::function<void(std::size_t)> *job = nullptr;
    {
      std::unique_lock lock(_mutex);
      _wake.wait(lock, [&] { return _shutdown || _generation != seen_generation; });
      if (_shutdown) {
        return;
      }
      seen_generation = _generation;
      job = _job;
    }

    std::exception_ptr error;
    try {
      (*job)(id);
    } catch (...) {
      error = std::current_exception();
    }

    {
      std::lock_guard lock(_mutex);
      if (error && !_error) {
        _error = error;
      }
      if (--_pending == 0) {
        _done.notify_one();
      }
    }
  }
}

} // namespace shmpart
