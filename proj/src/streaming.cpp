#include "shardkit/streaming.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "shardkit/metrics.hpp"

namespace shardkit {

StreamState::StreamState(const Graph& g, const Partition* previous,
                         const BalanceSpec& spec)
    : spec_(spec),
      previous_(previous),
      new_assignment_(g.node_count(), 0),
      streamed_(g.node_count(), false),
      x_(spec.k, 0),
      counts_(spec.k, 0),
      capacity_ceil_(spec.stream_capacity_ceil()),
      remaining_(g.node_count()),
      lower_deficit_(static_cast<std::uint64_t>(spec.k) * spec.lower) {
  if (previous_ != nullptr && previous_->assignment.size() != g.node_count())
    throw std::invalid_argument("previous partition size mismatch");
}

bool StreamState::open(ShardId i) const {
  if (x_[i] >= capacity_ceil_) return false;
  // Admitting a node here must leave enough unstreamed nodes to fill
  // every shard up to the lower bound.
  const std::uint64_t deficit_here = x_[i] < spec_.lower ? 1 : 0;
  return lower_deficit_ - deficit_here <= remaining_ - 1;
}

ShardId StreamState::hybrid_shard(NodeId u, bool& known) const {
  if (streamed_[u]) {
    known = true;
    return new_assignment_[u];
  }
  if (previous_ != nullptr) {
    known = true;
    return previous_->assignment[u];
  }
  known = false;
  return 0;
}

std::int64_t StreamState::hybrid_counts(const Graph& g, NodeId u) {
  std::fill(counts_.begin(), counts_.end(), 0);
  std::int64_t seen = 0;
  for (NodeId v : g.neighbors(u)) {
    bool known = false;
    ShardId s = hybrid_shard(v, known);
    if (known) {
      ++counts_[s];
      ++seen;
    }
  }
  return seen;
}

std::int64_t StreamState::hybrid_gain(const Graph& g, NodeId u,
                                      ShardId current) {
  hybrid_counts(g, u);
  std::int64_t best = 0;
  for (ShardId i = 0; i < spec_.k; ++i) best = std::max(best, counts_[i]);
  return best - counts_[current];
}

void StreamState::commit(NodeId u, ShardId shard) {
  if (streamed_[u]) throw std::logic_error("node streamed twice");
  if (x_[shard] < spec_.lower) --lower_deficit_;
  ++x_[shard];
  --remaining_;
  streamed_[u] = true;
  new_assignment_[u] = shard;
}

ShardId StreamState::assign(const Graph& g, NodeId u, Rng* tie_rng) {
  hybrid_counts(g, u);

  // score_i = |V_i ∩ N(u)| * (1 - x_i/C), evaluated as count*(C - x) so
  // that ties compare exactly whenever C is integral (always at eps=0).
  const double cap = spec_.stream_capacity;
  double best_score = -1.0;
  std::uint64_t best_load = 0;
  ShardId pick = spec_.k;  // sentinel
  TiePicker picker(tie_rng);
  for (ShardId i = 0; i < spec_.k; ++i) {
    if (!open(i)) continue;
    const double score =
        static_cast<double>(counts_[i]) * (cap - static_cast<double>(x_[i]));
    if (score > best_score) {
      best_score = score;
      best_load = x_[i];
      pick = i;
      picker.reset();
    } else if (score == best_score) {
      if (tie_rng == nullptr) {
        if (x_[i] < best_load) {  // least-loaded, then lowest index
          best_load = x_[i];
          pick = i;
        }
      } else if (picker.take_tied()) {
        best_load = x_[i];
        pick = i;
      }
    }
  }
  if (pick >= spec_.k)
    throw std::logic_error("no open shard during stream (capacity bug)");
  commit(u, pick);
  return pick;
}

Partition reldg_iteration(const Graph& g, const Partition* previous,
                          const StreamOrder& order, const BalanceSpec& spec,
                          IncumbencyThreshold c, Rng* tie_rng) {
  if (order.permutation.size() != g.node_count() || !order.is_permutation())
    throw std::invalid_argument(
        "stream order is not a permutation of the node set");

  StreamState state(g, previous, spec);
  const bool incumbency_active = previous != nullptr && !c.is_neg_inf();

  for (NodeId u : order.permutation) {
    if (incumbency_active) {
      const ShardId prev_shard = previous->assignment[u];
      if (!c.eligible(state.hybrid_gain(g, u, prev_shard)) &&
          state.open(prev_shard)) {
        state.commit(u, prev_shard);
        continue;
      }
    }
    state.assign(g, u, tie_rng);
  }

  Partition result(state.take_assignment(), spec);
  const std::uint64_t cap = spec.stream_capacity_ceil();
  for (std::uint64_t size : result.shard_sizes) {
    if (size > cap) throw std::logic_error("stream exceeded shard capacity");
    if (size < spec.lower)
      throw std::logic_error("stream left a shard below its lower bound");
  }
  return result;
}

namespace {

struct RestreamTrial {
  TrialSeries series;
  Partition partition;
  std::vector<StreamOrder> captured_orders;
};

RestreamTrial run_restream_trial(const Graph& g, OrderKind order_kind,
                                 const BalanceSpec& spec,
                                 IncumbencyThreshold c,
                                 std::uint32_t max_iters,
                                 std::uint64_t trial_seed,
                                 const RunOptions& options,
                                 const std::vector<std::uint32_t>& capture) {
  using clock = std::chrono::steady_clock;
  Rng trial_rng(trial_seed);
  Rng* tie_rng = options.deterministic_ties ? nullptr : &trial_rng;
  const bool dynamic = order_is_dynamic(order_kind);

  RestreamTrial trial;
  trial.series.seed = trial_seed;

  // Static order, fixed for the whole trial; dynamic kinds open with
  // degree order and refresh from each finished partition.
  StreamOrder order;
  switch (order_kind) {
    case OrderKind::kRandom: order = order_random(g, trial_rng.next_u64()); break;
    case OrderKind::kBfs: order = order_bfs(g); break;
    case OrderKind::kDegree: order = order_degree(g); break;
    case OrderKind::kCc: order = order_cc(g); break;
    case OrderKind::kGain:
    case OrderKind::kAmbivalence: order = order_degree(g); break;
  }
  order.iteration_of_validity = 1;

  PartitionHistory history;
  bool have_partition = false;
  Partition current;

  for (std::uint32_t iter = 1; iter <= max_iters; ++iter) {
    // Dynamic orders are undefined without an external shard (k=1); the
    // degree bootstrap order stands in for the whole run there.
    if (dynamic && iter > 1 && spec.k >= 2) {
      order = order_kind == OrderKind::kGain ? order_gain(g, current)
                                             : order_ambivalence(g, current);
      order.iteration_of_validity = iter;
    }
    if (std::find(capture.begin(), capture.end(), iter) != capture.end())
      trial.captured_orders.push_back(order);

    const auto start = clock::now();
    Partition next = reldg_iteration(
        g, have_partition ? &current : nullptr, order, spec, c, tie_rng);

    std::uint64_t changed = g.node_count();
    if (have_partition) {
      changed = 0;
      for (NodeId u = 0; u < g.node_count(); ++u)
        changed += next.assignment[u] != current.assignment[u];
    }
    current = std::move(next);
    have_partition = true;

    IterationRecord record;
    record.iteration = iter;
    record.relocations = changed;
    record.internal_edge_fraction = internal_edge_fraction(g, current);
    record.wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
    if (options.track_periodicity) {
      history.record(current);
      record.periodicity = periodicity_histogram(history, history.latest_time());
    }
    trial.series.iterations.push_back(record);
    // Early stop once a stream reproduces the partition exactly, unless a
    // later iteration's order was requested (converged runs keep emitting
    // the same order, so streaming on is well defined and cheap).
    if (changed == 0 && capture.empty()) break;
  }
  trial.partition = std::move(current);
  return trial;
}

}  // namespace

RunReport run_restream(const Graph& g, OrderKind order_kind,
                       const BalanceSpec& spec, IncumbencyThreshold c,
                       std::uint32_t max_iters, std::uint64_t seed,
                       std::uint32_t trials, const RunOptions& options) {
  RunReport report;
  report.graph_name = options.graph_name;
  report.algo = "reldg";
  report.order = order_name(order_kind);
  report.k = spec.k;
  report.epsilon = spec.epsilon;
  report.incumbency = c.label();
  report.max_iters = max_iters;
  report.seed = seed;
  report.trials = trials;
  report.deterministic_ties = options.deterministic_ties;
  for (std::uint32_t t = 0; t < trials; ++t) {
    RestreamTrial trial = run_restream_trial(g, order_kind, spec, c, max_iters,
                                             Rng::derive(seed, t), options, {});
    report.trial_series.push_back(std::move(trial.series));
  }
  return report;
}

Partition run_restream_partition(const Graph& g, OrderKind order_kind,
                                 const BalanceSpec& spec,
                                 IncumbencyThreshold c,
                                 std::uint32_t max_iters, std::uint64_t seed,
                                 std::uint32_t trial_index,
                                 const RunOptions& options) {
  return run_restream_trial(g, order_kind, spec, c, max_iters,
                            Rng::derive(seed, trial_index), options, {})
      .partition;
}

std::vector<StreamOrder> restream_orders_at(
    const Graph& g, OrderKind order_kind, const BalanceSpec& spec,
    IncumbencyThreshold c, std::uint32_t max_iters, std::uint64_t seed,
    std::uint32_t trial_index, const std::vector<std::uint32_t>& iterations,
    const RunOptions& options) {
  return run_restream_trial(g, order_kind, spec, c, max_iters,
                            Rng::derive(seed, trial_index), options, iterations)
      .captured_orders;
}

}  // namespace shardkit
