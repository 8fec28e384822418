// Command-line front end: graph stats, partitioning runs, incumbency and
// shard-count sweeps, stream-order correlation, and the ambivalence
// bound check. Emits JSON by default; errors go to stderr as a JSON
// object with a nonzero exit code.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shardkit/bounds_check.hpp"
#include "shardkit/experiments.hpp"
#include "shardkit/graph.hpp"
#include "shardkit/kendall.hpp"
#include "shardkit/report.hpp"
#include "shardkit/streaming.hpp"
#include "shardkit/sync.hpp"

namespace {

using nlohmann::ordered_json;
using namespace shardkit;

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write to " + out_path);
  out << text << '\n';
}

std::string graph_basename(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

struct CommonRunFlags {
  std::string graph_path;
  std::uint32_t k = 16;
  double epsilon = 0.0;
  std::uint32_t iters = 10;
  std::uint64_t seed = 1;
  std::uint32_t trials = 10;
  std::string incumbency = "default";
  std::string out_path;
  std::string format = "json";
  bool deterministic_ties = false;

  void attach(CLI::App* cmd, bool with_algo_knobs = true) {
    cmd->add_option("--graph", graph_path, "edge-list file (SNAP format)")
        ->required();
    cmd->add_option("--k", k, "number of shards");
    cmd->add_option("--epsilon", epsilon, "imbalance parameter");
    cmd->add_option("--iters", iters, "maximum iterations");
    cmd->add_option("--seed", seed, "base seed");
    cmd->add_option("--trials", trials, "independent trials to average");
    if (with_algo_knobs)
      cmd->add_option("--incumbency", incumbency,
                      "relocation threshold c, integer or neg-inf "
                      "(default: per-algorithm)");
    cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--deterministic-ties", deterministic_ties,
                  "break argmax ties by index instead of seeded-uniform");
  }

  RunOptions run_options() const {
    RunOptions options;
    options.deterministic_ties = deterministic_ties;
    options.graph_name = graph_basename(graph_path);
    return options;
  }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"balanced k-way graph partitioning toolkit"};
  app.require_subcommand(1);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "graph summary statistics");
  std::string stats_graph, stats_out;
  stats_cmd->add_option("--graph", stats_graph, "edge-list file")->required();
  stats_cmd->add_option("--out", stats_out, "output path ('-' for stdout)");

  // partition
  auto* part_cmd = app.add_subcommand("partition", "run one partitioner");
  CommonRunFlags part;
  std::string part_algo = "reldg";
  std::string part_order = "random";
  std::string dump_path;
  part_cmd->add_option("--algo", part_algo, "blp, shp1, shp2, klshp or reldg")
      ->check(CLI::IsMember({"blp", "shp1", "shp2", "klshp", "reldg"}));
  part_cmd->add_option("--order", part_order,
                       "stream order for reldg: random, bfs, degree, cc, "
                       "gain, ambivalence");
  part.attach(part_cmd);
  part_cmd->add_option("--dump-assignment", dump_path,
                       "write 'original_id shard_id' lines for trial 0");

  // sweep-c
  auto* sweepc_cmd = app.add_subcommand("sweep-c", "incumbency threshold sweep");
  CommonRunFlags sweepc;
  std::string sweepc_algos = "blp,klshp,reldg";
  std::string sweepc_values = "neg-inf,-2,-1,0,1,2";
  sweepc_cmd->add_option("--algos", sweepc_algos, "comma list of algorithms");
  sweepc_cmd->add_option("--c-values", sweepc_values,
                         "comma list of thresholds (integers or neg-inf)");
  sweepc.attach(sweepc_cmd, /*with_algo_knobs=*/false);

  // sweep-k
  auto* sweepk_cmd = app.add_subcommand("sweep-k", "shard count sweep");
  CommonRunFlags sweepk;
  std::string sweepk_values = "20,40,60,80,100";
  std::string sweepk_order = "ambivalence";
  sweepk_cmd->add_option("--k-values", sweepk_values, "comma list of k");
  sweepk_cmd->add_option("--order", sweepk_order, "stream order");
  sweepk.attach(sweepk_cmd, /*with_algo_knobs=*/false);

  // correlate-orders
  auto* corr_cmd = app.add_subcommand("correlate-orders",
                                      "weighted Kendall tau between orders");
  CommonRunFlags corr;
  corr.attach(corr_cmd, /*with_algo_knobs=*/false);

  // check-bounds
  auto* bounds_cmd = app.add_subcommand("check-bounds",
                                        "Monte-Carlo ambivalence bound check");
  std::string bounds_ks = "2,4,16";
  std::string bounds_ds = "1,4,8,32";
  std::uint64_t bounds_samples = 100000;
  std::uint64_t bounds_seed = 1;
  std::string bounds_out, bounds_format = "json";
  bounds_cmd->add_option("--k-values", bounds_ks, "comma list of shard counts");
  bounds_cmd->add_option("--degrees", bounds_ds, "comma list of degrees");
  bounds_cmd->add_option("--samples", bounds_samples, "samples per cell");
  bounds_cmd->add_option("--seed", bounds_seed, "seed");
  bounds_cmd->add_option("--out", bounds_out, "output path ('-' for stdout)");
  bounds_cmd->add_option("--format", bounds_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  auto split_list = [](const std::string& text) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      items.push_back(text.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return items;
  };

  if (stats_cmd->parsed()) {
    const Graph g = load_edge_list(stats_graph);
    const GraphStats s = graph_stats(g);
    ordered_json j{{"graph", graph_basename(stats_graph)},
                   {"n", s.n},
                   {"m", s.m},
                   {"avg_degree", s.avg_degree},
                   {"lcc_fraction", s.lcc_fraction}};
    write_text(j.dump(2), stats_out);
    return 0;
  }

  if (part_cmd->parsed()) {
    const Graph g = load_edge_list(part.graph_path);
    const BalanceSpec spec =
        BalanceSpec::create(g.node_count(), part.k, part.epsilon);
    RunReport report;
    if (part_algo == "reldg") {
      const OrderKind order = order_from_name(part_order);
      const IncumbencyThreshold c = part.incumbency == "default"
                                        ? IncumbencyThreshold::neg_inf()
                                        : IncumbencyThreshold::parse(part.incumbency);
      report = run_restream(g, order, spec, c, part.iters, part.seed,
                            part.trials, part.run_options());
      if (!dump_path.empty()) {
        Partition final = run_restream_partition(g, order, spec, c, part.iters,
                                                 part.seed, 0, part.run_options());
        dump_assignment(g, final, dump_path);
        report.assignment_path = dump_path;
      }
    } else {
      const SyncAlgo algo = sync_algo_from_name(part_algo);
      const IncumbencyThreshold c = part.incumbency == "default"
                                        ? default_incumbency(algo)
                                        : IncumbencyThreshold::parse(part.incumbency);
      report = run_synchronous(g, algo, spec, c, part.iters, part.seed,
                               part.trials, part.run_options());
      if (!dump_path.empty()) {
        Partition final = run_synchronous_partition(
            g, algo, spec, c, part.iters, part.seed, 0, part.run_options());
        dump_assignment(g, final, dump_path);
        report.assignment_path = dump_path;
      }
    }
    write_text(part.format == "json" ? report_to_json_string(report)
                                     : report_to_csv_string(report),
               part.out_path);
    return 0;
  }

  if (sweepc_cmd->parsed()) {
    const Graph g = load_edge_list(sweepc.graph_path);
    SweepConfig cfg{sweepc.k, sweepc.epsilon, sweepc.iters, sweepc.seed,
                    sweepc.trials, sweepc.run_options()};
    std::vector<IncumbencyThreshold> cs;
    for (const std::string& v : split_list(sweepc_values))
      cs.push_back(IncumbencyThreshold::parse(v));
    auto cells = sweep_incumbency(g, split_list(sweepc_algos), cs, cfg);
    write_text(sweepc.format == "json" ? incumbency_sweep_to_json(cells)
                                       : incumbency_sweep_to_csv(cells),
               sweepc.out_path);
    return 0;
  }

  if (sweepk_cmd->parsed()) {
    const Graph g = load_edge_list(sweepk.graph_path);
    SweepConfig cfg{sweepk.k, sweepk.epsilon, sweepk.iters, sweepk.seed,
                    sweepk.trials, sweepk.run_options()};
    std::vector<std::uint32_t> ks;
    for (const std::string& v : split_list(sweepk_values))
      ks.push_back(static_cast<std::uint32_t>(std::stoul(v)));
    auto cells = sweep_k(g, ks, order_from_name(sweepk_order), cfg);
    write_text(sweepk.format == "json" ? k_sweep_to_json(cells)
                                       : k_sweep_to_csv(cells),
               sweepk.out_path);
    return 0;
  }

  if (corr_cmd->parsed()) {
    const Graph g = load_edge_list(corr.graph_path);
    const BalanceSpec spec =
        BalanceSpec::create(g.node_count(), corr.k, corr.epsilon);
    const CorrelationMatrix matrix =
        correlate_orders(g, spec, corr.seed, corr.iters);
    if (corr.format == "json") {
      ordered_json j{{"labels", matrix.labels}};
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < matrix.labels.size(); ++jj)
          row.push_back(matrix.at(i, jj));
        rows.push_back(row);
      }
      j["tau"] = rows;
      write_text(j.dump(2), corr.out_path);
    } else {
      std::ostringstream out;
      out.precision(17);
      out << "order";
      for (const auto& label : matrix.labels) out << ',' << label;
      out << '\n';
      for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
        out << matrix.labels[i];
        for (std::size_t jj = 0; jj < matrix.labels.size(); ++jj)
          out << ',' << matrix.at(i, jj);
        out << '\n';
      }
      write_text(out.str(), corr.out_path);
    }
    return 0;
  }

  if (bounds_cmd->parsed()) {
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "k,degree,estimate,lower,upper,std_error,pass\n";
    bool all_pass = true;
    for (const std::string& ks : split_list(bounds_ks)) {
      for (const std::string& ds : split_list(bounds_ds)) {
        const auto k = static_cast<std::uint32_t>(std::stoul(ks));
        const auto d = static_cast<std::uint64_t>(std::stoull(ds));
        const BoundsCheck r = check_ambivalence_bounds(
            k, d, bounds_samples, Rng::derive(bounds_seed, k * 1000 + d));
        all_pass = all_pass && r.pass;
        rows.push_back(ordered_json{{"k", k},
                                    {"degree", d},
                                    {"estimate", r.estimate},
                                    {"lower", r.lower},
                                    {"upper", r.upper},
                                    {"std_error", r.std_error},
                                    {"pass", r.pass}});
        csv << k << ',' << d << ',' << r.estimate << ',' << r.lower << ','
            << r.upper << ',' << r.std_error << ',' << (r.pass ? 1 : 0)
            << '\n';
      }
    }
    write_text(bounds_format == "json" ? rows.dump(2) : csv.str(), bounds_out);
    return all_pass ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ParseError& e) {
    ordered_json err{{"error", {{"type", "parse"}, {"message", e.what()}, {"line", e.line}}}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    ordered_json err{{"error", {{"type", "runtime"}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
}
