#include "shardkit/metrics.hpp"

#include <cstdlib>
#include <stdexcept>

namespace shardkit {

namespace {
void require_multiple_shards(const Partition& p) {
  if (p.spec.k < 2)
    throw std::invalid_argument("undefined for k=1: no external shard exists");
}
}  // namespace

std::vector<std::int64_t> colocation_counts(const Graph& g, const Partition& p,
                                            NodeId u) {
  ColocationCounter c(p.spec.k);
  c.count(g, p, u);
  return {c.values().begin(), c.values().end()};
}

std::int64_t gain_from_counts(const ColocationCounter& c, ShardId current) {
  std::int64_t best = 0;
  for (ShardId i = 0; i < c.k(); ++i) best = std::max(best, c[i]);
  return best - c[current];
}

ExternalGain external_gain_from_counts(const ColocationCounter& c,
                                       ShardId current, Rng* tie_rng) {
  std::int64_t best = INT64_MIN;
  ShardId target = 0;
  TiePicker picker(tie_rng);
  for (ShardId i = 0; i < c.k(); ++i) {
    if (i == current) continue;
    if (c[i] > best) {
      best = c[i];
      target = i;
      picker.reset();
    } else if (c[i] == best && picker.take_tied()) {
      target = i;
    }
  }
  return {best - c[current], target};
}

std::int64_t ambivalence_from_counts(const ColocationCounter& c,
                                     ShardId current) {
  std::int64_t widest = 0;
  for (ShardId i = 0; i < c.k(); ++i) {
    if (i == current) continue;
    widest = std::max(widest, std::abs(c[i] - c[current]));
  }
  return -widest;
}

std::int64_t adjusted_ambivalence_from_counts(const ColocationCounter& c,
                                              ShardId current) {
  std::int64_t widest = 0;
  for (ShardId i = 0; i < c.k(); ++i) {
    if (i == current) continue;
    std::int64_t diff = c[i] - c[current];
    widest = std::max(widest, diff * diff);
  }
  return widest;
}

std::int64_t gain(const Graph& g, const Partition& p, NodeId u) {
  ColocationCounter c(p.spec.k);
  c.count(g, p, u);
  return gain_from_counts(c, p.shard_of(u));
}

ExternalGain external_gain(const Graph& g, const Partition& p, NodeId u,
                           Rng* tie_rng) {
  require_multiple_shards(p);
  ColocationCounter c(p.spec.k);
  c.count(g, p, u);
  return external_gain_from_counts(c, p.shard_of(u), tie_rng);
}

std::int64_t ambivalence(const Graph& g, const Partition& p, NodeId u) {
  require_multiple_shards(p);
  ColocationCounter c(p.spec.k);
  c.count(g, p, u);
  return ambivalence_from_counts(c, p.shard_of(u));
}

std::int64_t adjusted_ambivalence(const Graph& g, const Partition& p,
                                  NodeId u) {
  require_multiple_shards(p);
  ColocationCounter c(p.spec.k);
  c.count(g, p, u);
  return adjusted_ambivalence_from_counts(c, p.shard_of(u));
}

std::uint64_t cut_size(const Graph& g, const Partition& p) {
  std::uint64_t crossing_endpoints = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const ShardId su = p.assignment[u];
    for (NodeId v : g.neighbors(u))
      crossing_endpoints += (su != p.assignment[v]);
  }
  return crossing_endpoints / 2;
}

double internal_edge_fraction(const Graph& g, const Partition& p) {
  if (g.edge_count == 0) return 1.0;
  return 1.0 - static_cast<double>(cut_size(g, p)) /
                   static_cast<double>(g.edge_count);
}

}  // namespace shardkit
