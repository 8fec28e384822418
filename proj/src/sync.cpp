#include "shardkit/sync.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "shardkit/metrics.hpp"

namespace shardkit {

const char* sync_algo_name(SyncAlgo algo) {
  switch (algo) {
    case SyncAlgo::kBlp: return "blp";
    case SyncAlgo::kShp1: return "shp1";
    case SyncAlgo::kShp2: return "shp2";
    case SyncAlgo::kKlShp: return "klshp";
  }
  return "?";
}

SyncAlgo sync_algo_from_name(const std::string& name) {
  if (name == "blp") return SyncAlgo::kBlp;
  if (name == "shp1") return SyncAlgo::kShp1;
  if (name == "shp2") return SyncAlgo::kShp2;
  if (name == "klshp") return SyncAlgo::kKlShp;
  throw std::invalid_argument("unknown synchronous algorithm: " + name);
}

IncumbencyThreshold default_incumbency(SyncAlgo algo) {
  // KL-SHP admits second-best nodes by default; the others move only
  // strictly improving nodes.
  return algo == SyncAlgo::kKlShp ? IncumbencyThreshold::neg_inf()
                                  : IncumbencyThreshold::at(0);
}

std::uint64_t blp_iteration(const Graph& g, Partition& p,
                            IncumbencyThreshold c, Rng* tie_rng) {
  MoveQueueSet queues = build_queues(g, p, QueueMode::kBlp, c, tie_rng);
  RelocationLp lp = build_relocation_lp(queues, p.shard_sizes, p.spec);
  RelocationPlan plan = solve_relocation(lp);

  std::uint64_t moved = 0;
  for (ShardId i = 0; i < p.spec.k; ++i) {
    for (ShardId j = 0; j < p.spec.k; ++j) {
      if (i == j) continue;
      const std::uint64_t z = plan.z(i, j, p.spec.k);
      const auto& q = queues.queue(i, j);
      for (std::uint64_t t = 0; t < z; ++t) p.move(q[t].node, j);
      moved += z;
    }
  }
  if (!p.within_bounds())
    throw std::logic_error("BLP relocation left shard bounds violated");
  return moved;
}

namespace {

// Positive-gain swap pass shared by the SHP variants. `shuffle` replaces
// the sorted order with a random one; `kl_rule` stops a pair's swaps at
// the first rank whose external gains no longer sum positive.
std::uint64_t paired_swaps(Partition& p, MoveQueueSet& queues, bool shuffle,
                           bool kl_rule, Rng* pair_rng) {
  std::uint64_t swaps = 0;
  const std::uint32_t k = p.spec.k;
  for (ShardId i = 0; i < k; ++i) {
    for (ShardId j = i + 1; j < k; ++j) {
      auto& forward = queues.queue(i, j);
      auto& backward = queues.queue(j, i);
      if (shuffle && pair_rng != nullptr) {
        pair_rng->shuffle(forward);
        pair_rng->shuffle(backward);
      }
      const std::uint64_t rounds = std::min(forward.size(), backward.size());
      for (std::uint64_t t = 0; t < rounds; ++t) {
        if (kl_rule && forward[t].priority + backward[t].priority <= 0) break;
        p.move(forward[t].node, j);
        p.move(backward[t].node, i);
        ++swaps;
      }
    }
  }
  return swaps;
}

}  // namespace

std::uint64_t shp1_iteration(const Graph& g, Partition& p,
                             IncumbencyThreshold c, Rng& pair_rng,
                             Rng* tie_rng) {
  MoveQueueSet queues = build_queues(g, p, QueueMode::kShp, c, tie_rng);
  return paired_swaps(p, queues, /*shuffle=*/true, /*kl_rule=*/false,
                      &pair_rng);
}

std::uint64_t shp2_iteration(const Graph& g, Partition& p,
                             IncumbencyThreshold c, Rng* tie_rng) {
  MoveQueueSet queues = build_queues(g, p, QueueMode::kShp, c, tie_rng);
  return paired_swaps(p, queues, /*shuffle=*/false, /*kl_rule=*/false,
                      nullptr);
}

std::uint64_t klshp_iteration(const Graph& g, Partition& p,
                              IncumbencyThreshold c, Rng* tie_rng) {
  MoveQueueSet queues = build_queues(g, p, QueueMode::kKl, c, tie_rng);
  return paired_swaps(p, queues, /*shuffle=*/false, /*kl_rule=*/true,
                      nullptr);
}

namespace {

struct SyncTrial {
  TrialSeries series;
  Partition partition;
};

SyncTrial run_sync_trial(const Graph& g, SyncAlgo algo,
                         const BalanceSpec& spec, IncumbencyThreshold c,
                         std::uint32_t max_iters, std::uint64_t trial_seed,
                         const RunOptions& options) {
  using clock = std::chrono::steady_clock;
  Rng trial_rng(trial_seed);
  Rng* tie_rng = options.deterministic_ties ? nullptr : &trial_rng;

  SyncTrial trial;
  trial.series.seed = trial_seed;
  trial.partition = random_balanced_init(g, spec, trial_rng.next_u64());

  PartitionHistory history;
  if (options.track_periodicity) history.record(trial.partition);

  IterationRecord init_record;
  init_record.iteration = 0;
  init_record.internal_edge_fraction = internal_edge_fraction(g, trial.partition);
  init_record.periodicity.fresh = 1.0;
  trial.series.iterations.push_back(init_record);

  for (std::uint32_t iter = 1; iter <= max_iters; ++iter) {
    const auto start = clock::now();
    std::uint64_t relocations = 0;
    switch (algo) {
      case SyncAlgo::kBlp:
        relocations = blp_iteration(g, trial.partition, c, tie_rng);
        break;
      case SyncAlgo::kShp1:
        relocations = shp1_iteration(g, trial.partition, c, trial_rng, tie_rng);
        break;
      case SyncAlgo::kShp2:
        relocations = shp2_iteration(g, trial.partition, c, tie_rng);
        break;
      case SyncAlgo::kKlShp:
        relocations = klshp_iteration(g, trial.partition, c, tie_rng);
        break;
    }
    if (!trial.partition.within_bounds())
      throw std::logic_error("iteration broke shard bounds");

    IterationRecord record;
    record.iteration = iter;
    record.relocations = relocations;
    record.internal_edge_fraction = internal_edge_fraction(g, trial.partition);
    record.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    if (options.track_periodicity) {
      history.record(trial.partition);
      record.periodicity = periodicity_histogram(history, history.latest_time());
    }
    trial.series.iterations.push_back(record);
    if (relocations == 0) break;  // equilibrium
  }
  return trial;
}

}  // namespace

RunReport run_synchronous(const Graph& g, SyncAlgo algo,
                          const BalanceSpec& spec, IncumbencyThreshold c,
                          std::uint32_t max_iters, std::uint64_t seed,
                          std::uint32_t trials, const RunOptions& options) {
  RunReport report;
  report.graph_name = options.graph_name;
  report.algo = sync_algo_name(algo);
  report.k = spec.k;
  report.epsilon = spec.epsilon;
  report.incumbency = c.label();
  report.max_iters = max_iters;
  report.seed = seed;
  report.trials = trials;
  report.deterministic_ties = options.deterministic_ties;
  for (std::uint32_t t = 0; t < trials; ++t) {
    SyncTrial trial = run_sync_trial(g, algo, spec, c, max_iters,
                                     Rng::derive(seed, t), options);
    report.trial_series.push_back(std::move(trial.series));
  }
  return report;
}

Partition run_synchronous_partition(const Graph& g, SyncAlgo algo,
                                    const BalanceSpec& spec,
                                    IncumbencyThreshold c,
                                    std::uint32_t max_iters,
                                    std::uint64_t seed,
                                    std::uint32_t trial_index,
                                    const RunOptions& options) {
  return run_sync_trial(g, algo, spec, c, max_iters,
                        Rng::derive(seed, trial_index), options)
      .partition;
}

}  // namespace shardkit
