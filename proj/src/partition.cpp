#include "shardkit/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "shardkit/rng.hpp"

namespace shardkit {

Partition::Partition(std::vector<ShardId> assign, BalanceSpec s)
    : assignment(std::move(assign)), shard_sizes(s.k, 0), spec(s) {
  for (ShardId shard : assignment) {
    if (shard >= spec.k) throw std::invalid_argument("shard id out of range");
    ++shard_sizes[shard];
  }
}

void Partition::check_sizes() const {
  std::vector<std::uint64_t> recount(spec.k, 0);
  for (ShardId shard : assignment) ++recount[shard];
  if (recount != shard_sizes)
    throw std::logic_error("shard size counters out of sync with assignment");
}

Partition random_balanced_init(const Graph& g, const BalanceSpec& spec,
                               std::uint64_t seed) {
  const std::uint64_t n = g.node_count();
  if (spec.k > n)
    throw std::invalid_argument("infeasible: more shards than nodes");

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(seed);
  rng.shuffle(order);

  const std::uint64_t base = n / spec.k;
  const std::uint64_t extra = n % spec.k;  // first `extra` shards get base+1
  std::vector<ShardId> assignment(n);
  std::uint64_t pos = 0;
  for (ShardId shard = 0; shard < spec.k; ++shard) {
    std::uint64_t block = base + (shard < extra ? 1 : 0);
    for (std::uint64_t i = 0; i < block; ++i) assignment[order[pos++]] = shard;
  }
  return Partition(std::move(assignment), spec);
}

std::optional<std::uint32_t> periodicity(const PartitionHistory& hist,
                                         std::uint32_t t, NodeId u) {
  if (t < 1 || t > hist.latest_time())
    throw std::out_of_range("periodicity time not recorded");
  const ShardId current = hist.snapshots[t - 1][u];
  for (std::uint32_t x = 1; x < t; ++x) {
    if (hist.snapshots[t - 1 - x][u] == current) return x;
  }
  return std::nullopt;
}

PeriodicityHistogram periodicity_histogram(const PartitionHistory& hist,
                                           std::uint32_t t) {
  if (t < 1 || t > hist.latest_time())
    throw std::out_of_range("periodicity time not recorded");
  const std::size_t n = hist.snapshots[t - 1].size();
  std::uint64_t buckets[5] = {0, 0, 0, 0, 0};  // 1, 2, 3, 4+, new
  for (NodeId u = 0; u < n; ++u) {
    const ShardId current = hist.snapshots[t - 1][u];
    std::uint32_t period = 0;
    for (std::uint32_t x = 1; x < t; ++x) {
      if (hist.snapshots[t - 1 - x][u] == current) {
        period = x;
        break;
      }
    }
    if (period == 0)
      ++buckets[4];
    else if (period >= 4)
      ++buckets[3];
    else
      ++buckets[period - 1];
  }
  PeriodicityHistogram h;
  const double total = static_cast<double>(n);
  h.period1 = buckets[0] / total;
  h.period2 = buckets[1] / total;
  h.period3 = buckets[2] / total;
  h.period4_plus = buckets[3] / total;
  h.fresh = buckets[4] / total;
  return h;
}

}  // namespace shardkit
