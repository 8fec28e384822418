#pragma once

#include <cstdint>
#include <string>

#include "shardkit/graph.hpp"
#include "shardkit/move_queues.hpp"
#include "shardkit/partition.hpp"
#include "shardkit/relocation_lp.hpp"
#include "shardkit/report.hpp"

namespace shardkit {

enum class SyncAlgo { kBlp, kShp1, kShp2, kKlShp };

const char* sync_algo_name(SyncAlgo algo);
SyncAlgo sync_algo_from_name(const std::string& name);
IncumbencyThreshold default_incumbency(SyncAlgo algo);

// One BLP iteration: queues from the frozen snapshot, relocation LP,
// pop the top z_ij nodes per pair. Returns nodes moved.
std::uint64_t blp_iteration(const Graph& g, Partition& p,
                            IncumbencyThreshold c, Rng* tie_rng = nullptr);

// One SHP-I iteration: positive-gain queues, random 1-for-1 pairing per
// unordered shard pair until the shorter queue empties. Returns swaps.
std::uint64_t shp1_iteration(const Graph& g, Partition& p,
                             IncumbencyThreshold c, Rng& pair_rng,
                             Rng* tie_rng = nullptr);

// One SHP-II iteration: as SHP-I but rank-paired in sorted order.
std::uint64_t shp2_iteration(const Graph& g, Partition& p,
                             IncumbencyThreshold c, Rng* tie_rng = nullptr);

// One KL-SHP iteration: queues include second-best nodes; rank-paired
// swaps continue while the paired external gains sum strictly positive.
std::uint64_t klshp_iteration(const Graph& g, Partition& p,
                              IncumbencyThreshold c, Rng* tie_rng = nullptr);

struct RunOptions {
  bool deterministic_ties = false;
  bool track_periodicity = true;
  std::string graph_name;
};

// Multi-trial driver: random balanced init, iterate to max_iters or until
// an iteration relocates nothing, record the fraction per iteration
// (iteration 0 = initial partition).
RunReport run_synchronous(const Graph& g, SyncAlgo algo,
                          const BalanceSpec& spec, IncumbencyThreshold c,
                          std::uint32_t max_iters, std::uint64_t seed,
                          std::uint32_t trials, const RunOptions& options = {});

// Final partition of one trial (seed derived the same way as in
// run_synchronous for trial_index).
Partition run_synchronous_partition(const Graph& g, SyncAlgo algo,
                                    const BalanceSpec& spec,
                                    IncumbencyThreshold c,
                                    std::uint32_t max_iters,
                                    std::uint64_t seed,
                                    std::uint32_t trial_index,
                                    const RunOptions& options = {});

}  // namespace shardkit
