#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shardkit/graph.hpp"
#include "shardkit/move_queues.hpp"
#include "shardkit/orders.hpp"
#include "shardkit/report.hpp"
#include "shardkit/sync.hpp"

namespace shardkit {

// Shared knobs for the sweep drivers.
struct SweepConfig {
  std::uint32_t k = 16;
  double epsilon = 0.0;
  std::uint32_t max_iters = 10;
  std::uint64_t seed = 1;
  std::uint32_t trials = 10;
  RunOptions options;
};

struct IncumbencySweepCell {
  std::string algo;         // blp, klshp, reldg
  std::string incumbency;   // c label
  double mean_final_fraction = 0.0;
};

// Final fractions for each (algorithm, c) combination. reLDG runs with a
// random persistent order (the vanilla form the threshold analysis uses).
std::vector<IncumbencySweepCell> sweep_incumbency(
    const Graph& g, const std::vector<std::string>& algos,
    const std::vector<IncumbencyThreshold>& c_values, const SweepConfig& cfg);

struct KSweepCell {
  std::uint32_t k = 0;
  double mean_final_fraction = 0.0;
};

// Ambivalence-ordered restreaming across shard counts at exact balance.
std::vector<KSweepCell> sweep_k(const Graph& g,
                                const std::vector<std::uint32_t>& k_values,
                                OrderKind order, const SweepConfig& cfg);

std::string incumbency_sweep_to_json(const std::vector<IncumbencySweepCell>& cells);
std::string incumbency_sweep_to_csv(const std::vector<IncumbencySweepCell>& cells);
std::string k_sweep_to_json(const std::vector<KSweepCell>& cells);
std::string k_sweep_to_csv(const std::vector<KSweepCell>& cells);

}  // namespace shardkit
