#include "shardkit/experiments.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shardkit/streaming.hpp"

namespace shardkit {

std::vector<IncumbencySweepCell> sweep_incumbency(
    const Graph& g, const std::vector<std::string>& algos,
    const std::vector<IncumbencyThreshold>& c_values, const SweepConfig& cfg) {
  std::vector<IncumbencySweepCell> cells;
  const BalanceSpec spec = BalanceSpec::create(g.node_count(), cfg.k, cfg.epsilon);
  for (const std::string& algo : algos) {
    for (const IncumbencyThreshold& c : c_values) {
      RunReport report;
      if (algo == "reldg") {
        report = run_restream(g, OrderKind::kRandom, spec, c, cfg.max_iters,
                              cfg.seed, cfg.trials, cfg.options);
      } else {
        report = run_synchronous(g, sync_algo_from_name(algo), spec, c,
                                 cfg.max_iters, cfg.seed, cfg.trials,
                                 cfg.options);
      }
      cells.push_back({algo, c.label(), report.mean_final_fraction()});
    }
  }
  return cells;
}

std::vector<KSweepCell> sweep_k(const Graph& g,
                                const std::vector<std::uint32_t>& k_values,
                                OrderKind order, const SweepConfig& cfg) {
  std::vector<KSweepCell> cells;
  for (std::uint32_t k : k_values) {
    if (k == 1) {
      cells.push_back({k, 1.0});  // trivial partition keeps every edge
      continue;
    }
    const BalanceSpec spec = BalanceSpec::create(g.node_count(), k, cfg.epsilon);
    RunReport report =
        run_restream(g, order, spec, IncumbencyThreshold::neg_inf(),
                     cfg.max_iters, cfg.seed, cfg.trials, cfg.options);
    cells.push_back({k, report.mean_final_fraction()});
  }
  return cells;
}

std::string incumbency_sweep_to_json(
    const std::vector<IncumbencySweepCell>& cells) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& cell : cells)
    rows.push_back({{"algo", cell.algo},
                    {"incumbency", cell.incumbency},
                    {"mean_final_fraction", cell.mean_final_fraction}});
  return rows.dump(2);
}

std::string incumbency_sweep_to_csv(
    const std::vector<IncumbencySweepCell>& cells) {
  std::ostringstream out;
  out.precision(17);
  out << "algo,incumbency,mean_final_fraction\n";
  for (const auto& cell : cells)
    out << cell.algo << ',' << cell.incumbency << ','
        << cell.mean_final_fraction << '\n';
  return out.str();
}

std::string k_sweep_to_json(const std::vector<KSweepCell>& cells) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& cell : cells)
    rows.push_back({{"k", cell.k},
                    {"mean_final_fraction", cell.mean_final_fraction}});
  return rows.dump(2);
}

std::string k_sweep_to_csv(const std::vector<KSweepCell>& cells) {
  std::ostringstream out;
  out.precision(17);
  out << "k,mean_final_fraction\n";
  for (const auto& cell : cells)
    out << cell.k << ',' << cell.mean_final_fraction << '\n';
  return out.str();
}

}  // namespace shardkit
