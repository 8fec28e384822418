#pragma once

#include <cstdint>
#include <vector>

#include "shardkit/graph.hpp"
#include "shardkit/move_queues.hpp"
#include "shardkit/orders.hpp"
#include "shardkit/partition.hpp"
#include "shardkit/report.hpp"
#include "shardkit/sync.hpp"

namespace shardkit {

// Mid-stream assignment state. Already-streamed nodes read their new
// shard; unstreamed ones read the previous iteration's (or none on the
// first iteration).
class StreamState {
 public:
  StreamState(const Graph& g, const Partition* previous,
              const BalanceSpec& spec);

  ShardId assign(const Graph& g, NodeId u, Rng* tie_rng);

  // True when the shard can still take a node without breaking the
  // capacity cap or starving another shard below its lower bound.
  bool open(ShardId i) const;

  bool streamed(NodeId u) const { return streamed_[u]; }
  ShardId hybrid_shard(NodeId u, bool& known) const;
  std::uint64_t assigned_count(ShardId i) const { return x_[i]; }
  const BalanceSpec& spec() const { return spec_; }
  std::uint64_t remaining() const { return remaining_; }

  // Gain of u over the hybrid landscape relative to `current`.
  std::int64_t hybrid_gain(const Graph& g, NodeId u, ShardId current);

  // Used by the incumbency path: place u on a chosen shard directly.
  void commit(NodeId u, ShardId shard);

  std::vector<ShardId> take_assignment() { return std::move(new_assignment_); }

 private:
  std::int64_t hybrid_counts(const Graph& g, NodeId u);

  BalanceSpec spec_;
  const Partition* previous_;
  std::vector<ShardId> new_assignment_;
  std::vector<bool> streamed_;
  std::vector<std::uint64_t> x_;       // nodes assigned this stream
  std::vector<std::int64_t> counts_;   // scratch: hybrid neighbor counts
  std::uint64_t capacity_ceil_;
  std::uint64_t remaining_;            // nodes not yet streamed
  std::uint64_t lower_deficit_;        // sum over shards of max(0, lower - x)
};

// One full stream pass. With a finite incumbency threshold and a previous
// partition, a node whose gain over the hybrid view is <= c keeps its
// previous shard when that shard is open; everyone else takes the
// weighted-greedy choice. Throws std::invalid_argument if `order` is not
// a permutation.
Partition reldg_iteration(const Graph& g, const Partition* previous,
                          const StreamOrder& order, const BalanceSpec& spec,
                          IncumbencyThreshold c, Rng* tie_rng = nullptr);

// Restreaming driver. Dynamic order kinds use degree order on iteration 1
// and are recomputed from the finished partition between iterations.
// Stops early when an iteration changes no assignment.
RunReport run_restream(const Graph& g, OrderKind order_kind,
                       const BalanceSpec& spec, IncumbencyThreshold c,
                       std::uint32_t max_iters, std::uint64_t seed,
                       std::uint32_t trials, const RunOptions& options = {});

// Final partition of one restream trial (same derivation as run_restream).
Partition run_restream_partition(const Graph& g, OrderKind order_kind,
                                 const BalanceSpec& spec,
                                 IncumbencyThreshold c,
                                 std::uint32_t max_iters, std::uint64_t seed,
                                 std::uint32_t trial_index,
                                 const RunOptions& options = {});

// Orders used by a restream trial at selected iterations (1-based), for
// stream-order correlation studies.
std::vector<StreamOrder> restream_orders_at(
    const Graph& g, OrderKind order_kind, const BalanceSpec& spec,
    IncumbencyThreshold c, std::uint32_t max_iters, std::uint64_t seed,
    std::uint32_t trial_index, const std::vector<std::uint32_t>& iterations,
    const RunOptions& options = {});

}  // namespace shardkit
