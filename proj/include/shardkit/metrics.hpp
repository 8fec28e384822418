#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shardkit/graph.hpp"
#include "shardkit/partition.hpp"
#include "shardkit/rng.hpp"

namespace shardkit {

// Reusable |N(u) ∩ V_i| counter; one instance per worker, reset per node.
class ColocationCounter {
 public:
  explicit ColocationCounter(std::uint32_t k) : counts_(k, 0) {}

  void count(const Graph& g, const Partition& p, NodeId u) {
    std::fill(counts_.begin(), counts_.end(), 0);
    for (NodeId v : g.neighbors(u)) ++counts_[p.assignment[v]];
  }

  std::int64_t operator[](ShardId i) const { return counts_[i]; }
  std::span<const std::int64_t> values() const { return counts_; }
  std::uint32_t k() const { return static_cast<std::uint32_t>(counts_.size()); }

 private:
  std::vector<std::int64_t> counts_;
};

// Entry i holds |N(u) ∩ V_i|; entries sum to degree(u).
std::vector<std::int64_t> colocation_counts(const Graph& g, const Partition& p,
                                            NodeId u);

// Best improvement in co-located neighbor count from a unilateral move,
// taken over all shards including the current one; always >= 0.
std::int64_t gain(const Graph& g, const Partition& p, NodeId u);

struct ExternalGain {
  std::int64_t value;  // may be negative
  ShardId target;      // argmax external shard
};

// Gain restricted to shards other than the current one. Ties on the
// target shard break to the lowest index when tie_rng is null, else
// seeded-uniform among the tied shards. Requires k >= 2.
ExternalGain external_gain(const Graph& g, const Partition& p, NodeId u,
                           Rng* tie_rng = nullptr);

// Negated largest absolute co-location gap vs. any external shard;
// ranges in [-degree(u), 0]. Requires k >= 2.
std::int64_t ambivalence(const Graph& g, const Partition& p, NodeId u);

// Squared-gap variant (non-negated). Requires k >= 2.
std::int64_t adjusted_ambivalence(const Graph& g, const Partition& p, NodeId u);

// Scratch-based forms for batch evaluation (counter must already hold u's
// counts).
std::int64_t gain_from_counts(const ColocationCounter& c, ShardId current);
ExternalGain external_gain_from_counts(const ColocationCounter& c,
                                       ShardId current, Rng* tie_rng);
std::int64_t ambivalence_from_counts(const ColocationCounter& c,
                                     ShardId current);
std::int64_t adjusted_ambivalence_from_counts(const ColocationCounter& c,
                                              ShardId current);

// Cross-shard edges, each undirected edge counted once.
std::uint64_t cut_size(const Graph& g, const Partition& p);

// 1 - |C(P)|/m.
double internal_edge_fraction(const Graph& g, const Partition& p);

}  // namespace shardkit
