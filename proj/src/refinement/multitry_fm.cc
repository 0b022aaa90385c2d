/*******************************************************************************
 * @file:   multitry_fm.cc
 ******************************************************************************/
#include "shmpart/refinement/multitry_fm.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <string>
#include <stdexcept>
#include <unordered_set>

namespace shmpart {

void StoppingStats::record(const EdgeWeight gain) {
  const double g = static_cast<double>(gain);
  const double m2 = variance * static_cast<double>(steps);
  ++steps;
  const double delta = g - mean;
  mean += delta / static_cast<double>(steps);
  variance = (m2 + delta * (g - mean)) / static_cast<double>(steps);
}

void StoppingStats::reset() {
  steps = 0;
  mean = 0.0;
  variance = 0.0;
}

bool should_stop(const StoppingStats &stats) {
  if (stats.steps == 0) {
    return false;
  }
  return static_cast<double>(stats.steps) * stats.mean * stats.mean > stats.alpha * stats.variance + stats.beta;
}

LocalSearchView::LocalSearchView(const Graph &graph, const Partition &partition, const std::uint64_t seed)
    : _graph(graph),
      _partition(partition),
      _block_weight(partition.block_weights().begin(), partition.block_weights().end()),
      _connection(partition.k(), 0),
      _rng(seed) {}

void LocalSearchView::reset() {
  _overlay.clear();
  _block_weight.assign(_partition.block_weights().begin(), _partition.block_weights().end());
  pq_clear();
}

std::optional<std::pair<BlockID, EdgeWeight>> LocalSearchView::best_move(const NodeID v, const NodeWeight bound) {
  const BlockID own = block(v);
  _graph.for_each_neighbor(v, [&](const NodeID u, const EdgeWeight w) {
    const BlockID b = block(u);
    if (_connection[b] == 0) {
      _touched_blocks.push_back(b);
    }
    _connection[b] += w;
  });

  const NodeWeight c = _graph.vertex_weight(v);
  const EdgeWeight own_connection = _connection[own];
  BlockID best = kInvalidBlockID;
  EdgeWeight best_connection = -1;
  for (const BlockID b : _touched_blocks) {
    const EdgeWeight connection = _connection[b];
    _connection[b] = 0;
    if (b == own || _block_weight[b] + c > bound) {
      continue;
    }
    if (connection > best_connection || (connection == best_connection && b < best)) {
      best = b;
      best_connection = connection;
    }
  }
  _touched_blocks.clear();

  if (best == kInvalidBlockID) {
    return std::nullopt;
  }
  return std::make_pair(best, best_connection - own_connection);
}

void LocalSearchView::apply(const Move &move) {
  _overlay.insert_or_assign(move.vertex, move.to);
  _block_weight[move.from] -= _graph.vertex_weight(move.vertex);
  _block_weight[move.to] += _graph.vertex_weight(move.vertex);
}

void LocalSearchView::undo(const Move &move) {
  _overlay.insert_or_assign(move.vertex, move.from);
  _block_weight[move.to] -= _graph.vertex_weight(move.vertex);
  _block_weight[move.from] += _graph.vertex_weight(move.vertex);
}

void LocalSearchView::pq_update(const NodeID v, const EdgeWeight gain) {
  _pq_gain.insert_or_assign(v, gain);
  _pq.emplace(gain, _rng(), v);
}

std::optional<std::pair<NodeID, EdgeWeight>> LocalSearchView::pq_pop() {
  while (!_pq.empty()) {
    const auto [gain, tiebreak, v] = _pq.top();
    _pq.pop();
    const auto current = _pq_gain.lookup(v);
    if (!current || *current != gain) {
      continue;
    }
    _pq_gain.insert_or_assign(v, kRemoved);
    return std::make_pair(v, gain);
  }
  return std::nullopt;
}

void LocalSearchView::pq_clear() {
  _pq = {};
  _pq_gain.clear();
}

MoveMarks::MoveMarks(const NodeID n) : _marks(std::make_unique<std::atomic<std::uint8_t>[]>(n)), _n(n) {
  clear();
}

bool MoveMarks::try_mark(const NodeID v) {
  return _marks[v].exchange(1, std::memory_order_acq_rel) == 0;
}

void MoveMarks::clear() {
  for (NodeID v = 0; v < _n; ++v) {
    _marks[v].store(0, std::memory_order_relaxed);
  }
}

MoveSequence perform_moves(
    LocalSearchView &view, const NodeID start, MoveMarks &marks, const NodeWeight bound, const double alpha,
    const double beta
) {
  MoveSequence sequence;
  if (marks.marked(start)) {
    return sequence;
  }
  const Graph &graph = view.graph();
  view.pq_clear();

  const auto consider = [&](const NodeID u) {
    if (marks.marked(u)) {
      return;
    }
    if (const auto move = view.best_move(u, bound)) {
      view.pq_update(u, move->second);
    }
  };
  consider(start);
  for (const NodeID u : graph.neighbors(start)) {
    consider(u);
  }

  StoppingStats stats;
  stats.alpha = alpha;
  stats.beta = beta;
  EdgeWeight current = 0;
  EdgeWeight best = 0;
  std::size_t best_prefix = 0;

  while (const auto top = view.pq_pop()) {
    const auto [v, claimed] = *top;
    if (marks.marked(v)) {
      continue;
    }
    const auto move = view.best_move(v, bound);
    if (!move) {
      continue;
    }
    if (move->second != claimed) {
      view.pq_update(v, move->second);
      continue;
    }
    if (!marks.try_mark(v)) {
      continue;
    }

    const Move applied{v, view.block(v), move->first, move->second};
    view.apply(applied);
    sequence.moves.push_back(applied);
    current += applied.gain;
    if (current > best) {
      best = current;
      best_prefix = sequence.moves.size();
      stats.reset();
    } else {
      stats.record(applied.gain);
    }

    for (const NodeID u : graph.neighbors(v)) {
      consider(u);
    }
    if (should_stop(stats)) {
      break;
    }
  }

  for (std::size_t i = sequence.moves.size(); i > best_prefix; --i) {
    view.undo(sequence.moves[i - 1]);
  }
  sequence.moves.resize(best_prefix);
  sequence.claimed_best_prefix = best_prefix;
  view.pq_clear();
  return sequence;
}

ApplyResult apply_moves(const Graph &graph, Partition &partition, std::span<const MoveSequence> sequences) {
  std::unordered_set<NodeID> seen;
  for (const MoveSequence &sequence : sequences) {
    for (const Move &move : sequence.moves) {
      if (!seen.insert(move.vertex).second) {
        throw std::logic_error("vertex " + std::to_string(move.vertex) + " occurs in more than one move");
      }
      if (move.vertex >= graph.n() || move.to >= partition.k() || move.to == move.from) {
        throw std::logic_error("malformed move");
      }
    }
  }

  const EdgeWeight initial_cut = partition.cut();
  const NodeWeight bound = partition.bound();
  ApplyResult result;

  for (const MoveSequence &sequence : sequences) {
    EdgeWeight best_cut = partition.cut();
    std::size_t best_length = 0;
    std::size_t applied = 0;
    for (const Move &move : sequence.moves) {
      if (partition.block(move.vertex) != move.from) {
        throw std::logic_error("move source block disagrees with the partition");
      }
      if (partition.block_weight(move.to) + graph.vertex_weight(move.vertex) > bound) {
        break;
      }
      partition.move(graph, move.vertex, move.to);
      ++applied;
      if (partition.cut() < best_cut) {
        best_cut = partition.cut();
        best_length = applied;
      }
    }
    for (std::size_t i = applied; i > best_length; --i) {
      const Move &move = sequence.moves[i - 1];
      partition.move(graph, move.vertex, move.from);
    }
    for (std::size_t i = 0; i < best_length; ++i) {
      result.moved.push_back(sequence.moves[i].vertex);
    }
  }

  result.gain = initial_cut - partition.cut();
  return result;
}

namespace {
std::vector<NodeID> shuffled_boundary(
    const Graph &graph, const Partition &partition, WorkerPool &pool, const std::uint64_t seed
) {
  constexpr std::size_t kChunk = 4096;
  const NodeID n = graph.n();
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<NodeID>> buckets(chunks);

  parallel_for(pool, 0, chunks, 1, [&](const std::size_t first, const std::size_t last, std::size_t) {
    for (std::size_t chunk = first; chunk < last; ++chunk) {
      auto &bucket = buckets[chunk];
      const NodeID end = static_cast<NodeID>(std::min<std::size_t>(n, (chunk + 1) * kChunk));
      for (auto v = static_cast<NodeID>(chunk * kChunk); v < end; ++v) {
        const BlockID own = partition.block(v);
        const auto neighbors = graph.neighbors(v);
        if (std::any_of(neighbors.begin(), neighbors.end(), [&](const NodeID u) {
              return partition.block(u) != own;
            })) {
          bucket.push_back(v);
        }
      }
      Random rng(derive_seed(seed, chunk));
      std::shuffle(bucket.begin(), bucket.end(), rng);
    }
  });

  std::vector<std::size_t> bucket_order(chunks);
  std::iota(bucket_order.begin(), bucket_order.end(), 0);
  Random rng(seed);
  std::shuffle(bucket_order.begin(), bucket_order.end(), rng);

  std::vector<NodeID> queue;
  for (const std::size_t chunk : bucket_order) {
    queue.insert(queue.end(), buckets[chunk].begin(), buckets[chunk].end());
  }
  return queue;
}
} // namespace

EdgeWeight mls(
    const Graph &graph,
    Partition &partition,
    const MlsConfig &config,
    WorkerPool &pool,
    const std::uint64_t seed,
    MlsStats *stats
) {
  const EdgeWeight initial_cut = partition.cut();
  MlsStats local_stats;
  if (partition.k() < 2 || graph.n() == 0) {
    if (stats != nullptr) {
      *stats = local_stats;
    }
    return 0;
  }

  const double beta = config.beta.value_or(std::log(std::max<double>(graph.n(), 2.0)));
  const NodeWeight bound = partition.bound();
  const std::size_t workers = pool.size();

  std::vector<std::unique_ptr<LocalSearchView>> views;
  for (std::size_t w = 0; w < workers; ++w) {
    views.push_back(std::make_unique<LocalSearchView>(graph, partition, derive_seed(seed, 5, w)));
  }
  MoveMarks marks(graph.n());
  std::vector<std::vector<MoveSequence>> produced(workers);

  for (std::size_t global = 0; global < config.global_iterations; ++global) {
    std::vector<NodeID> queue = shuffled_boundary(graph, partition, pool, derive_seed(seed, 6, global));
    EdgeWeight global_gain = 0;

    for (std::size_t local = 0; !queue.empty(); ++local) {
      marks.clear();
      for (auto &view : views) {
        view->reset();
      }
      std::atomic<std::size_t> next{0};
      std::atomic<bool> stop{false};

      pool.run([&](const std::size_t worker) {
        auto &out = produced[worker];
        out.clear();
        std::size_t searches = 0;
        while (!stop.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= queue.size()) {
            stop.store(true, std::memory_order_relaxed);
            break;
          }
          MoveSequence sequence = perform_moves(*views[worker], queue[i], marks, bound, config.alpha, beta);
          sequence.worker = worker;
          sequence.search = searches++;
          if (!sequence.moves.empty()) {
            out.push_back(std::move(sequence));
          }
        }
      });

      std::vector<MoveSequence> all;
      for (auto &sequences : produced) {
        std::move(sequences.begin(), sequences.end(), std::back_inserter(all));
      }
      ApplyResult applied = apply_moves(graph, partition, all);

      ++local_stats.local_iterations;
      local_stats.cut_after_apply.push_back(partition.cut());
      local_stats.balanced_after_apply.push_back(partition.balanced());
      global_gain += applied.gain;

      if (applied.gain <= 0 || static_cast<double>(applied.gain) <= config.local_threshold * global_gain) {
        break;
      }
      queue = std::move(applied.moved);
      Random rng(derive_seed(seed, 7, global * 1024 + local));
      std::shuffle(queue.begin(), queue.end(), rng);
    }

    if (global_gain == 0) {
      break;
    }
  }

  local_stats.total_gain = initial_cut - partition.cut();
  if (stats != nullptr) {
    *stats = std::move(local_stats);
  }
  return initial_cut - partition.cut();
}

EdgeWeight mls(
    const Graph &graph, Partition &partition, const MlsConfig &config, const std::size_t workers,
    const std::uint64_t seed
) {
  WorkerPool pool(workers);
  return mls(graph, partition, config, pool, seed);
}

} // namespace shmpart
