#include "shardkit/move_queues.hpp"

#include <algorithm>
#include <stdexcept>

namespace shardkit {

IncumbencyThreshold IncumbencyThreshold::parse(const std::string& text) {
  if (text == "neg-inf" || text == "-inf") return neg_inf();
  if (text == "pos-inf" || text == "+inf" || text == "inf") return pos_inf();
  std::size_t used = 0;
  long long v = std::stoll(text, &used);
  if (used != text.size())
    throw std::invalid_argument("bad incumbency threshold: " + text);
  return at(v);
}

std::uint64_t MoveQueueSet::total_entries() const {
  std::uint64_t total = 0;
  for (const auto& q : queues_) total += q.size();
  return total;
}

void MoveQueueSet::sort_entries() {
  for (auto& q : queues_) {
    std::sort(q.begin(), q.end(),
              [](const MoveQueueEntry& a, const MoveQueueEntry& b) {
                if (a.priority != b.priority) return a.priority > b.priority;
                return a.node < b.node;
              });
  }
}

MoveQueueSet build_queues(const Graph& g, const Partition& p, QueueMode mode,
                          IncumbencyThreshold c, Rng* tie_rng) {
  const std::uint32_t k = p.spec.k;
  if (k < 2) throw std::invalid_argument("move queues need k >= 2");
  MoveQueueSet queues(k);

  ColocationCounter counter(k);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    counter.count(g, p, u);
    const ShardId current = p.shard_of(u);
    const ExternalGain ext = external_gain_from_counts(counter, current, tie_rng);
    const std::int64_t plain_gain = std::max<std::int64_t>(ext.value, 0);
    if (!c.eligible(plain_gain)) continue;

    // BLP queues carry the Eq-(1) gain; SHP/KL carry the external gain.
    // The target is the best external shard either way (for a positive
    // gain the two argmaxes coincide; for a satisfied node only an
    // external target names an actual move).
    const std::int64_t priority =
        mode == QueueMode::kBlp ? plain_gain : ext.value;
    queues.queue(current, ext.target).push_back({u, priority});
  }
  queues.sort_entries();
  return queues;
}

}  // namespace shardkit
