#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shardkit/partition.hpp"

namespace shardkit {

// One measured point of a run. Iteration numbering matches the
// algorithm's: synchronous methods record the initial partition as
// iteration 0; streaming methods start at iteration 1 (no initial
// partition exists).
struct IterationRecord {
  std::uint32_t iteration = 0;
  double internal_edge_fraction = 0.0;
  std::uint64_t relocations = 0;  // nodes moved (BLP/reLDG) or swaps (SHP family)
  double wall_ms = 0.0;
  PeriodicityHistogram periodicity;
};

struct TrialSeries {
  std::uint64_t seed = 0;
  std::vector<IterationRecord> iterations;

  double final_fraction() const {
    return iterations.empty() ? 0.0 : iterations.back().internal_edge_fraction;
  }
};

// The experiment output contract: config echo plus per-trial series.
struct RunReport {
  // config echo
  std::string graph_name;
  std::string algo;
  std::string order;  // empty for synchronous algorithms
  std::uint32_t k = 0;
  double epsilon = 0.0;
  std::string incumbency;
  std::uint32_t max_iters = 0;
  std::uint64_t seed = 0;
  std::uint32_t trials = 0;
  bool deterministic_ties = false;

  std::vector<TrialSeries> trial_series;
  std::optional<std::string> assignment_path;

  double mean_final_fraction() const {
    if (trial_series.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& t : trial_series) sum += t.final_fraction();
    return sum / static_cast<double>(trial_series.size());
  }

  // mean fraction at a given iteration over the trials that reached it
  double mean_fraction_at(std::uint32_t iteration) const;
  // mean periodicity histogram at a given iteration (trials that reached it)
  PeriodicityHistogram mean_periodicity_at(std::uint32_t iteration) const;
};

enum class ReportFormat { kJson, kCsv };

ReportFormat report_format_from_name(const std::string& name);

// Stable-field-order JSON / flat CSV serialization.
std::string report_to_json_string(const RunReport& report);
RunReport report_from_json_string(const std::string& text);
std::string report_to_csv_string(const RunReport& report);

void emit_report(const RunReport& report, const std::string& path,
                 ReportFormat format);

// "original_id shard_id" lines, one per node.
void dump_assignment(const Graph& g, const Partition& p,
                     const std::string& path);

}  // namespace shardkit
