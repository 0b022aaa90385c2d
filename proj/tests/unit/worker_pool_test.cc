/*******************************************************************************
 * @file:   worker_pool_test.cc
 ******************************************************************************/
#include <gtest/gtest.h>

#include <numeric>

#include "shmpart/parallel/worker_pool.h"

namespace shmpart {
namespace {

TEST(WorkerPoolTest, RunsJobOncePerWorker) {
  WorkerPool pool(4);
  std::vector<std::atomic<int>> calls(4);
  pool.run([&](const std::size_t worker) { calls[worker].fetch_add(1); });
  for (const auto &c : calls) {
    EXPECT_EQ(c.load(), 1);
  }
}

TEST(WorkerPoolTest, PropagatesExceptions) {
  WorkerPool pool(3);
  EXPECT_THROW(
      pool.run([](const std::size_t worker) {
        if (worker == 2) {
          throw std::runtime_error("boom");
        }
      }),
      std::runtime_error
  );
  // the pool stays usable
  std::atomic<int> count{0};
  pool.run([&](std::size_t) { count.fetch_add(1); });
  EXPECT_EQ(count.load(), 3);
}

TEST(WorkerPoolTest, ParallelForCoversRangeOnce) {
  for (const std::size_t workers : {1, 2, 8}) {
    WorkerPool pool(workers);
    std::vector<std::atomic<int>> hits(10007);
    parallel_for(pool, 0, hits.size(), 64, [&](const std::size_t first, const std::size_t last, std::size_t) {
      for (std::size_t i = first; i < last; ++i) {
        hits[i].fetch_add(1);
      }
    });
    for (const auto &h : hits) {
      ASSERT_EQ(h.load(), 1);
    }
  }
}

TEST(WorkerPoolTest, ExclusivePrefixSum) {
  for (const std::size_t workers : {1, 3, 8}) {
    WorkerPool pool(workers);
    std::vector<std::uint64_t> values(50000);
    std::iota(values.begin(), values.end(), 1);
    std::vector<std::uint64_t> expected(values.size());
    std::exclusive_scan(values.begin(), values.end(), expected.begin(), std::uint64_t{0});
    const std::uint64_t total = parallel_exclusive_prefix_sum(pool, values);
    EXPECT_EQ(values, expected);
    EXPECT_EQ(total, 50000ull * 50001ull / 2);
  }
}

TEST(ConcurrentQueueTest, FifoAndSwap) {
  ConcurrentQueue<int> a;
  ConcurrentQueue<int> b;
  a.push(1);
  a.push(2);
  EXPECT_EQ(a.try_pop(), 1);
  a.swap(b);
  EXPECT_TRUE(a.empty());
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(b.try_pop(), 2);
  EXPECT_FALSE(b.try_pop().has_value());
}

} // namespace
} // namespace shmpart
