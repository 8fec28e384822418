#include "shardkit/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shardkit {

using ordered_json = nlohmann::ordered_json;

double RunReport::mean_fraction_at(std::uint32_t iteration) const {
  double sum = 0.0;
  std::uint32_t count = 0;
  for (const auto& trial : trial_series) {
    for (const auto& rec : trial.iterations) {
      if (rec.iteration == iteration) {
        sum += rec.internal_edge_fraction;
        ++count;
        break;
      }
    }
  }
  return count == 0 ? 0.0 : sum / count;
}

PeriodicityHistogram RunReport::mean_periodicity_at(std::uint32_t iteration) const {
  PeriodicityHistogram mean;
  std::uint32_t count = 0;
  for (const auto& trial : trial_series) {
    for (const auto& rec : trial.iterations) {
      if (rec.iteration == iteration) {
        mean.period1 += rec.periodicity.period1;
        mean.period2 += rec.periodicity.period2;
        mean.period3 += rec.periodicity.period3;
        mean.period4_plus += rec.periodicity.period4_plus;
        mean.fresh += rec.periodicity.fresh;
        ++count;
        break;
      }
    }
  }
  if (count > 0) {
    mean.period1 /= count;
    mean.period2 /= count;
    mean.period3 /= count;
    mean.period4_plus /= count;
    mean.fresh /= count;
  }
  return mean;
}

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown report format: " + name);
}

namespace {

ordered_json histogram_to_json(const PeriodicityHistogram& h) {
  return ordered_json{{"period_1", h.period1},
                      {"period_2", h.period2},
                      {"period_3", h.period3},
                      {"period_4_plus", h.period4_plus},
                      {"new", h.fresh}};
}

PeriodicityHistogram histogram_from_json(const ordered_json& j) {
  PeriodicityHistogram h;
  h.period1 = j.at("period_1").get<double>();
  h.period2 = j.at("period_2").get<double>();
  h.period3 = j.at("period_3").get<double>();
  h.period4_plus = j.at("period_4_plus").get<double>();
  h.fresh = j.at("new").get<double>();
  return h;
}

}  // namespace

std::string report_to_json_string(const RunReport& report) {
  ordered_json config{{"graph", report.graph_name},
                      {"algo", report.algo},
                      {"order", report.order},
                      {"k", report.k},
                      {"epsilon", report.epsilon},
                      {"incumbency", report.incumbency},
                      {"max_iters", report.max_iters},
                      {"seed", report.seed},
                      {"trials", report.trials},
                      {"deterministic_ties", report.deterministic_ties}};
  ordered_json trials = ordered_json::array();
  for (const auto& trial : report.trial_series) {
    ordered_json iterations = ordered_json::array();
    for (const auto& rec : trial.iterations) {
      iterations.push_back(
          ordered_json{{"iteration", rec.iteration},
                       {"internal_edge_fraction", rec.internal_edge_fraction},
                       {"relocations", rec.relocations},
                       {"wall_ms", rec.wall_ms},
                       {"periodicity", histogram_to_json(rec.periodicity)}});
    }
    trials.push_back(
        ordered_json{{"seed", trial.seed}, {"iterations", iterations}});
  }
  ordered_json root{{"config", config},
                    {"trials", trials},
                    {"mean_final_fraction", report.mean_final_fraction()}};
  if (report.assignment_path)
    root["assignment_path"] = *report.assignment_path;
  return root.dump(2);
}

RunReport report_from_json_string(const std::string& text) {
  const ordered_json root = ordered_json::parse(text);
  const ordered_json& config = root.at("config");
  RunReport report;
  report.graph_name = config.at("graph").get<std::string>();
  report.algo = config.at("algo").get<std::string>();
  report.order = config.at("order").get<std::string>();
  report.k = config.at("k").get<std::uint32_t>();
  report.epsilon = config.at("epsilon").get<double>();
  report.incumbency = config.at("incumbency").get<std::string>();
  report.max_iters = config.at("max_iters").get<std::uint32_t>();
  report.seed = config.at("seed").get<std::uint64_t>();
  report.trials = config.at("trials").get<std::uint32_t>();
  report.deterministic_ties = config.at("deterministic_ties").get<bool>();
  for (const auto& trial_json : root.at("trials")) {
    TrialSeries trial;
    trial.seed = trial_json.at("seed").get<std::uint64_t>();
    for (const auto& rec_json : trial_json.at("iterations")) {
      IterationRecord rec;
      rec.iteration = rec_json.at("iteration").get<std::uint32_t>();
      rec.internal_edge_fraction =
          rec_json.at("internal_edge_fraction").get<double>();
      rec.relocations = rec_json.at("relocations").get<std::uint64_t>();
      rec.wall_ms = rec_json.at("wall_ms").get<double>();
      rec.periodicity = histogram_from_json(rec_json.at("periodicity"));
      trial.iterations.push_back(rec);
    }
    report.trial_series.push_back(std::move(trial));
  }
  if (root.contains("assignment_path"))
    report.assignment_path = root.at("assignment_path").get<std::string>();
  return report;
}

std::string report_to_csv_string(const RunReport& report) {
  std::ostringstream out;
  out << "trial,seed,iteration,internal_edge_fraction,relocations,wall_ms,"
         "period_1,period_2,period_3,period_4_plus,period_new\n";
  out.precision(17);
  for (std::size_t t = 0; t < report.trial_series.size(); ++t) {
    const auto& trial = report.trial_series[t];
    for (const auto& rec : trial.iterations) {
      out << t << ',' << trial.seed << ',' << rec.iteration << ','
          << rec.internal_edge_fraction << ',' << rec.relocations << ','
          << rec.wall_ms << ',' << rec.periodicity.period1 << ','
          << rec.periodicity.period2 << ',' << rec.periodicity.period3 << ','
          << rec.periodicity.period4_plus << ',' << rec.periodicity.fresh
          << '\n';
    }
  }
  return out.str();
}

void emit_report(const RunReport& report, const std::string& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << (format == ReportFormat::kJson ? report_to_json_string(report)
                                        : report_to_csv_string(report));
  if (format == ReportFormat::kJson) out << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

void dump_assignment(const Graph& g, const Partition& p,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write assignment to " + path);
  for (NodeId u = 0; u < g.node_count(); ++u)
    out << g.id_map[u] << ' ' << p.assignment[u] << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace shardkit
