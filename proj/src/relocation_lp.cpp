#include "shardkit/relocation_lp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace shardkit {

std::uint64_t RelocationLp::variable_count() const {
  std::uint64_t total = 0;
  for (const auto& pair : levels) total += pair.size();
  return total;
}

RelocationLp build_relocation_lp(const MoveQueueSet& queues,
                                 const std::vector<std::uint64_t>& shard_sizes,
                                 const BalanceSpec& spec) {
  RelocationLp lp;
  lp.k = queues.k();
  lp.levels.resize(static_cast<std::size_t>(lp.k) * lp.k);
  lp.shard_sizes = shard_sizes;
  lp.lower = spec.lower;
  lp.upper = spec.upper;
  for (ShardId i = 0; i < lp.k; ++i) {
    for (ShardId j = 0; j < lp.k; ++j) {
      if (i == j) continue;
      const auto& q = queues.queue(i, j);  // sorted descending by gain
      auto& levels = lp.pair_levels(i, j);
      for (const MoveQueueEntry& e : q) {
        if (!levels.empty() && levels.back().gain == e.priority)
          ++levels.back().capacity;
        else
          levels.push_back({e.priority, 1, 0});
      }
      std::reverse(levels.begin(), levels.end());  // ascending gain
    }
  }
  return lp;
}

namespace {

// Collapsed residual arc: of all parallel residual arcs between two
// nodes, only the cheapest matters when hunting negative cycles.
struct ResidualArc {
  std::int64_t cost;
  std::uint64_t residual;
  // where to apply pushed flow:
  //   kForward: levels[pair][level].flow += delta
  //   kUndo:    levels[pair][level].flow -= delta
  //   kHub*:    hub slack arrays
  enum Kind { kNone, kForward, kUndo, kHubOut, kHubOutUndo, kHubIn, kHubInUndo };
  Kind kind = kNone;
  std::size_t pair = 0;
  std::size_t level = 0;
  std::uint32_t shard = 0;
};

class CirculationSolver {
 public:
  explicit CirculationSolver(RelocationLp& lp)
      : lp_(lp), node_count_(lp.k + 1), hub_(lp.k) {
    // Slack arcs encode the per-shard net-outflow window
    // [size - upper, size - lower]; a feasible snapshot keeps both ends
    // straddling zero, so the zero circulation is feasible.
    hub_in_cap_.resize(lp_.k);   // hub -> shard, up to size - lower
    hub_out_cap_.resize(lp_.k);  // shard -> hub, up to upper - size
    hub_in_flow_.assign(lp_.k, 0);
    hub_out_flow_.assign(lp_.k, 0);
    for (ShardId i = 0; i < lp_.k; ++i) {
      if (lp_.shard_sizes[i] < lp_.lower || lp_.shard_sizes[i] > lp_.upper)
        throw std::logic_error("relocation LP requires a feasible snapshot");
      hub_in_cap_[i] = lp_.shard_sizes[i] - lp_.lower;
      hub_out_cap_[i] = lp_.upper - lp_.shard_sizes[i];
    }
    arcs_.resize(static_cast<std::size_t>(node_count_) * node_count_);
  }

  void solve() {
    warm_start();
    while (cancel_negative_cycles()) {
    }
  }

 private:
  std::size_t pair_index(std::uint32_t from, std::uint32_t to) const {
    return static_cast<std::size_t>(from) * lp_.k + to;
  }

  // Cheapest residual arc from `from` to `to`, considering the unfilled
  // forward levels of (from,to), the undo side of (to,from), and the hub
  // slack arcs.
  ResidualArc best_arc(std::uint32_t from, std::uint32_t to) const {
    ResidualArc best{std::numeric_limits<std::int64_t>::max(), 0,
                     ResidualArc::kNone, 0, 0, 0};
    if (from == to) return best;
    if (from != hub_ && to != hub_) {
      // forward: highest unfilled gain of (from,to); levels are ascending
      const auto& fwd = lp_.pair_levels(from, to);
      for (std::size_t idx = fwd.size(); idx-- > 0;) {
        const GainLevel& lv = fwd[idx];
        if (lv.flow < lv.capacity) {
          best = {-lv.gain, lv.capacity - lv.flow, ResidualArc::kForward,
                  pair_index(from, to), idx, 0};
          break;
        }
      }
      // undo of (to,from): lowest used gain
      const auto& rev = lp_.pair_levels(to, from);
      for (std::size_t idx = 0; idx < rev.size(); ++idx) {
        const GainLevel& lv = rev[idx];
        if (lv.flow > 0) {
          if (lv.gain < best.cost)
            best = {lv.gain, lv.flow, ResidualArc::kUndo,
                    pair_index(to, from), idx, 0};
          break;
        }
      }
    } else if (to == hub_) {
      const std::uint32_t i = from;
      if (hub_out_flow_[i] < hub_out_cap_[i])
        best = {0, hub_out_cap_[i] - hub_out_flow_[i], ResidualArc::kHubOut,
                0, 0, i};
      else if (hub_in_flow_[i] > 0)
        best = {0, hub_in_flow_[i], ResidualArc::kHubInUndo, 0, 0, i};
    } else {  // from == hub_
      const std::uint32_t i = to;
      if (hub_in_flow_[i] < hub_in_cap_[i])
        best = {0, hub_in_cap_[i] - hub_in_flow_[i], ResidualArc::kHubIn,
                0, 0, i};
      else if (hub_out_flow_[i] > 0)
        best = {0, hub_out_flow_[i], ResidualArc::kHubOutUndo, 0, 0, i};
    }
    return best;
  }

  void refresh_arcs() {
    for (std::uint32_t a = 0; a < node_count_; ++a)
      for (std::uint32_t b = 0; b < node_count_; ++b)
        arcs_[static_cast<std::size_t>(a) * node_count_ + b] = best_arc(a, b);
  }

  const ResidualArc& arc(std::uint32_t a, std::uint32_t b) const {
    return arcs_[static_cast<std::size_t>(a) * node_count_ + b];
  }

  // Greedy opening moves before exact canceling: 1-for-1 exchanges
  // between shard pairs while the paired marginal gains sum positive,
  // then one-way transfers covered by the shard-size windows. Both are
  // negative-cycle pushes, so optimality is unaffected; they just leave
  // far fewer cycles for Bellman-Ford to find.
  void warm_start() {
    for (ShardId i = 0; i < lp_.k; ++i) {
      for (ShardId j = i + 1; j < lp_.k; ++j) {
        auto& fwd = lp_.pair_levels(i, j);
        auto& rev = lp_.pair_levels(j, i);
        std::size_t fi = fwd.size(), ri = rev.size();
        while (fi > 0 && ri > 0) {
          GainLevel& a = fwd[fi - 1];
          GainLevel& b = rev[ri - 1];
          if (a.gain + b.gain <= 0) break;
          const std::uint64_t delta =
              std::min(a.capacity - a.flow, b.capacity - b.flow);
          a.flow += delta;
          b.flow += delta;
          if (a.flow == a.capacity) --fi;
          if (b.flow == b.capacity) --ri;
        }
      }
    }
    for (ShardId i = 0; i < lp_.k; ++i) {
      for (ShardId j = 0; j < lp_.k; ++j) {
        if (i == j) continue;
        auto& levels = lp_.pair_levels(i, j);
        for (std::size_t idx = levels.size(); idx-- > 0;) {
          GainLevel& lv = levels[idx];
          if (lv.gain <= 0) break;
          if (lv.flow == lv.capacity) continue;  // consumed by exchanges
          const std::uint64_t window =
              std::min(hub_in_cap_[i] - hub_in_flow_[i],
                       hub_out_cap_[j] - hub_out_flow_[j]);
          if (window == 0) break;
          const std::uint64_t delta = std::min(window, lv.capacity - lv.flow);
          lv.flow += delta;
          hub_in_flow_[i] += delta;   // i's net outflow grows
          hub_out_flow_[j] += delta;  // j absorbs the inflow
        }
      }
    }
  }

  bool cancel_negative_cycles() {
    refresh_arcs();

    // Bellman-Ford from a virtual source (all distances 0).
    std::vector<std::int64_t> dist(node_count_, 0);
    std::vector<std::int32_t> pred(node_count_, -1);
    std::int32_t touched = -1;
    for (std::uint32_t round = 0; round < node_count_; ++round) {
      touched = -1;
      for (std::uint32_t a = 0; a < node_count_; ++a) {
        for (std::uint32_t b = 0; b < node_count_; ++b) {
          const ResidualArc& e = arc(a, b);
          if (e.kind == ResidualArc::kNone) continue;
          if (dist[a] + e.cost < dist[b]) {
            dist[b] = dist[a] + e.cost;
            pred[b] = static_cast<std::int32_t>(a);
            touched = static_cast<std::int32_t>(b);
          }
        }
      }
      if (touched < 0) return false;  // converged, no negative cycle
    }

    // The predecessor graph holds at least one negative cycle. Harvest
    // every vertex-disjoint cycle in it; disjoint cycles touch disjoint
    // pair states, so canceling one leaves the others intact. Each
    // candidate is revalidated against the live residual state and only
    // strictly negative ones are pushed (the pass loop re-runs until a
    // full Bellman-Ford pass finds nothing).
    std::vector<std::uint8_t> color(node_count_, 0);  // 0 new, 1 path, 2 done
    bool pushed = false;
    for (std::uint32_t start = 0; start < node_count_; ++start) {
      if (color[start] != 0) continue;
      std::vector<std::uint32_t> path;
      std::uint32_t walk = start;
      while (walk != UINT32_MAX && color[walk] == 0) {
        color[walk] = 1;
        path.push_back(walk);
        walk = pred[walk] < 0 ? UINT32_MAX : static_cast<std::uint32_t>(pred[walk]);
      }
      if (walk != UINT32_MAX && color[walk] == 1) {
        // found a pred-graph cycle: path suffix from `walk`
        auto cycle_start = std::find(path.begin(), path.end(), walk);
        std::vector<std::uint32_t> cycle(cycle_start, path.end());
        std::reverse(cycle.begin(), cycle.end());  // follow arc direction
        pushed = cancel_if_negative(cycle) || pushed;
      }
      for (std::uint32_t v : path) color[v] = 2;
    }
    return pushed;
  }

  // Revalidates the cycle against fresh per-pair state and pushes the
  // bottleneck if the total cost is still strictly negative.
  bool cancel_if_negative(const std::vector<std::uint32_t>& cycle) {
    std::vector<ResidualArc> arcs;
    std::int64_t total_cost = 0;
    std::uint64_t delta = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      ResidualArc e = best_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (e.kind == ResidualArc::kNone || e.residual == 0) return false;
      total_cost += e.cost;
      delta = std::min(delta, e.residual);
      arcs.push_back(e);
    }
    if (total_cost >= 0) return false;
    for (const ResidualArc& e : arcs) apply(e, delta);
    return true;
  }

  void apply(const ResidualArc& e, std::uint64_t delta) {
    switch (e.kind) {
      case ResidualArc::kForward: lp_.levels[e.pair][e.level].flow += delta; break;
      case ResidualArc::kUndo: lp_.levels[e.pair][e.level].flow -= delta; break;
      case ResidualArc::kHubOut: hub_out_flow_[e.shard] += delta; break;
      case ResidualArc::kHubOutUndo: hub_out_flow_[e.shard] -= delta; break;
      case ResidualArc::kHubIn: hub_in_flow_[e.shard] += delta; break;
      case ResidualArc::kHubInUndo: hub_in_flow_[e.shard] -= delta; break;
      case ResidualArc::kNone: throw std::logic_error("pushed on missing arc");
    }
  }

  RelocationLp& lp_;
  std::uint32_t node_count_;
  std::uint32_t hub_;
  std::vector<std::uint64_t> hub_in_cap_, hub_out_cap_;
  std::vector<std::uint64_t> hub_in_flow_, hub_out_flow_;
  std::vector<ResidualArc> arcs_;
};

}  // namespace

RelocationPlan solve_relocation(RelocationLp& lp) {
  for (auto& pair : lp.levels)
    for (auto& lv : pair) lv.flow = 0;

  CirculationSolver solver(lp);
  solver.solve();

  RelocationPlan plan;
  plan.moves.assign(static_cast<std::size_t>(lp.k) * lp.k, 0);
  for (ShardId i = 0; i < lp.k; ++i) {
    for (ShardId j = 0; j < lp.k; ++j) {
      if (i == j) continue;
      std::uint64_t z = 0;
      for (const GainLevel& lv : lp.pair_levels(i, j)) {
        z += lv.flow;
        plan.objective += lv.gain * static_cast<std::int64_t>(lv.flow);
      }
      plan.moves[static_cast<std::size_t>(i) * lp.k + j] = z;
    }
  }
  return plan;
}

}  // namespace shardkit
