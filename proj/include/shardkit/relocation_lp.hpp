#pragma once

#include <cstdint>
#include <vector>

#include "shardkit/balance.hpp"
#include "shardkit/move_queues.hpp"

namespace shardkit {

// One LP variable group: z in [0, capacity] candidate moves at this gain.
struct GainLevel {
  std::int64_t gain = 0;
  std::uint64_t capacity = 0;
  std::uint64_t flow = 0;  // solver-assigned value
};

// The within-iteration relocation program: maximize total gain of moves
// drawn from the queues, subject to every shard size staying within
// [lower, upper] after all moves. The constraint matrix is a circulation
// (each variable leaves one shard and enters another), so optimal vertex
// solutions are integral.
struct RelocationLp {
  std::uint32_t k = 0;
  std::vector<std::vector<GainLevel>> levels;  // per ordered pair i*k+j, gain ascending
  std::vector<std::uint64_t> shard_sizes;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;

  std::vector<GainLevel>& pair_levels(ShardId i, ShardId j) {
    return levels[static_cast<std::size_t>(i) * k + j];
  }
  const std::vector<GainLevel>& pair_levels(ShardId i, ShardId j) const {
    return levels[static_cast<std::size_t>(i) * k + j];
  }

  // number of distinct gain levels across all pairs
  std::uint64_t variable_count() const;
};

RelocationLp build_relocation_lp(const MoveQueueSet& queues,
                                 const std::vector<std::uint64_t>& shard_sizes,
                                 const BalanceSpec& spec);

struct RelocationPlan {
  std::vector<std::uint64_t> moves;  // z_ij aggregated over gain levels, i*k+j
  std::int64_t objective = 0;

  std::uint64_t z(ShardId i, ShardId j, std::uint32_t k) const {
    return moves[static_cast<std::size_t>(i) * k + j];
  }
};

// Exact solve via min-cost circulation (negative-cycle canceling on
// the shard multigraph plus a slack hub). Fills lp.levels[*].flow and
// returns the aggregated per-pair move counts.
RelocationPlan solve_relocation(RelocationLp& lp);

}  // namespace shardkit
