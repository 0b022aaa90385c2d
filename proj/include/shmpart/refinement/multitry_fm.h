/*******************************************************************************
 * Parallel multi-try k-way local search.
 *
 * Workers run many small localized searches, each started from one boundary
 * vertex. Moves are made only in a worker-private view of the partition
 * (block overlay plus local block weights); a shared mark array guarantees
 * that every vertex is moved by at most one search per local iteration. After
 * all start vertices have been consumed a single thread replays the recorded
 * move sequences against the real partition, recomputing every gain, and
 * keeps the best prefix of each sequence. The block weight bound is checked
 * against the real partition during replay, so the result is always balanced
 * if the input was.
 *
 * @file:   multitry_fm.h
 ******************************************************************************/
#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "shmpart/definitions.h"
#include "shmpart/graph.h"
#include "shmpart/hashing/cache_aware_map.h"
#include "shmpart/parallel/worker_pool.h"
#include "shmpart/partition.h"
#include "shmpart/random.h"

namespace shmpart {

struct Move {
  NodeID vertex;
  BlockID from;
  BlockID to;
  EdgeWeight gain;

  friend bool operator==(const Move &, const Move &) = default;
};

struct MoveSequence {
  std::vector<Move> moves;
  // Number of leading moves that achieved the best local cut.
  std::size_t claimed_best_prefix = 0;
  std::size_t worker = 0;
  std::size_t search = 0;
};

// Running statistics of the gains observed since the last improvement.
struct StoppingStats {
  std::size_t steps = 0;
  double mean = 0.0;
  double variance = 0.0;
  double alpha = 3.0;
  double beta = 0.0;

  void record(EdgeWeight gain);
  void reset();
};

// True iff steps * mean^2 > alpha * variance + beta; false when steps == 0.
bool should_stop(const StoppingStats &stats);

struct MlsConfig {
  std::size_t global_iterations = 3;
  // A local iteration is repeated while its gain exceeds this fraction of the
  // gain accumulated in the current global iteration.
  double local_threshold = 0.1;
  double alpha = 3.0;
  // Defaults to ln(n).
  std::optional<double> beta;
};

struct MlsStats {
  std::size_t local_iterations = 0;
  EdgeWeight total_gain = 0;
  // Cut after every replay.
  std::vector<EdgeWeight> cut_after_apply;
  std::vector<bool> balanced_after_apply;
};

// Worker-private view used by perform_moves. The overlay and local block
// weights persist across the searches a worker runs in one local iteration.
class LocalSearchView {
public:
  LocalSearchView(const Graph &graph, const Partition &partition, std::uint64_t seed);

  // Resets the overlay and local block weights to the partition's state.
  void reset();

  [[nodiscard]] BlockID block(const NodeID v) const {
    const auto overlaid = _overlay.lookup(v);
    return overlaid ? *overlaid : _partition.block(v);
  }
  [[nodiscard]] NodeWeight block_weight(const BlockID b) const {
    return _block_weight[b];
  }

  // Best target for v among adjacent blocks that can take v within `bound`
  // in this view; ties go to the smallest block ID.
  [[nodiscard]] std::optional<std::pair<BlockID, EdgeWeight>> best_move(NodeID v, NodeWeight bound);

  void apply(const Move &move);
  void undo(const Move &move);

  // Lazy max-priority queue of candidate vertices keyed by gain with random
  // tie-breaking.
  void pq_update(NodeID v, EdgeWeight gain);
  std::optional<std::pair<NodeID, EdgeWeight>> pq_pop();
  void pq_clear();

  [[nodiscard]] Random &rng() {
    return _rng;
  }
  [[nodiscard]] const Graph &graph() const {
    return _graph;
  }

private:
  static constexpr EdgeWeight kRemoved = std::numeric_limits<EdgeWeight>::min();

  const Graph &_graph;
  const Partition &_partition;
  CacheAwareMap<NodeID, BlockID> _overlay;
  std::vector<NodeWeight> _block_weight;
  std::priority_queue<std::tuple<EdgeWeight, std::uint64_t, NodeID>> _pq;
  CacheAwareMap<NodeID, EdgeWeight> _pq_gain;
  std::vector<EdgeWeight> _connection;
  std::vector<BlockID> _touched_blocks;
  Random _rng;
};

// Mark array shared by the searches of one local iteration.
class MoveMarks {
public:
  explicit MoveMarks(NodeID n);

  // Atomically marks v; returns false if it was already marked.
  bool try_mark(NodeID v);
  [[nodiscard]] bool marked(NodeID v) const {
    return _marks[v].load(std::memory_order_relaxed) != 0;
  }
  void clear();

private:
  std::unique_ptr<std::atomic<std::uint8_t>[]> _marks;
  NodeID _n;
};

// One localized search from `start`: moves are applied to the view only.
// Returns the moves up to the best local cut; the tail is undone in the view.
MoveSequence perform_moves(
    LocalSearchView &view, NodeID start, MoveMarks &marks, NodeWeight bound, double alpha, double beta
);

struct ApplyResult {
  EdgeWeight gain = 0;
  std::vector<NodeID> moved;
};

// Replays the sequences in order against the partition. For each sequence
// the prefix with the lowest true cut is kept (shortest on ties); a move that
// would overload its target block ends the sequence. Throws std::logic_error
// if a vertex occurs twice or a move's source block disagrees with the
// partition.
ApplyResult apply_moves(const Graph &graph, Partition &partition, std::span<const MoveSequence> sequences);

// Returns the cut reduction. Requires a balanced partition.
EdgeWeight mls(
    const Graph &graph,
    Partition &partition,
    const MlsConfig &config,
    WorkerPool &pool,
    std::uint64_t seed,
    MlsStats *stats = nullptr
);

EdgeWeight mls(
    const Graph &graph, Partition &partition, const MlsConfig &config, std::size_t workers, std::uint64_t seed
);

} // namespace shmpart
