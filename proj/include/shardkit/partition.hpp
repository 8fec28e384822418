#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shardkit/balance.hpp"
#include "shardkit/graph.hpp"

namespace shardkit {

using ShardId = std::uint32_t;

// Dense node -> shard map with maintained shard sizes.
struct Partition {
  std::vector<ShardId> assignment;
  std::vector<std::uint64_t> shard_sizes;
  BalanceSpec spec;

  Partition() = default;
  Partition(std::vector<ShardId> assign, BalanceSpec s);

  ShardId shard_of(NodeId u) const { return assignment[u]; }

  void move(NodeId u, ShardId to) {
    ShardId from = assignment[u];
    if (from == to) return;
    --shard_sizes[from];
    ++shard_sizes[to];
    assignment[u] = to;
  }

  // lower <= |V_i| <= upper for every shard.
  bool within_bounds() const {
    for (std::uint64_t size : shard_sizes)
      if (size < spec.lower || size > spec.upper) return false;
    return true;
  }

  // Recounts shard sizes from the assignment; throws std::logic_error on
  // mismatch with the maintained counters.
  void check_sizes() const;
};

// Uniformly random exactly-balanced assignment: shuffle the node list
// with the seeded generator, cut into contiguous blocks of size
// ceil(n/k) (first n mod k shards) and floor(n/k).
Partition random_balanced_init(const Graph& g, const BalanceSpec& spec,
                               std::uint64_t seed);

// Per-iteration assignment snapshots; times are 1-based.
struct PartitionHistory {
  std::vector<std::vector<ShardId>> snapshots;

  void record(const Partition& p) { snapshots.push_back(p.assignment); }
  std::uint32_t latest_time() const {
    return static_cast<std::uint32_t>(snapshots.size());
  }
};

// Minimum x >= 1 with P^(t)(u) = P^(t-x)(u); nullopt when the current
// shard never previously held u ("new" assignment).
std::optional<std::uint32_t> periodicity(const PartitionHistory& hist,
                                         std::uint32_t t, NodeId u);

// Fractions over all nodes at time t, bucketed {1, 2, 3, 4+, new}.
struct PeriodicityHistogram {
  double period1 = 0.0;
  double period2 = 0.0;
  double period3 = 0.0;
  double period4_plus = 0.0;
  double fresh = 0.0;

  double sum() const { return period1 + period2 + period3 + period4_plus + fresh; }
};

PeriodicityHistogram periodicity_histogram(const PartitionHistory& hist,
                                           std::uint32_t t);

}  // namespace shardkit
