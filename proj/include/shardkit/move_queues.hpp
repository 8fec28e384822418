#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shardkit/graph.hpp"
#include "shardkit/metrics.hpp"
#include "shardkit/partition.hpp"

namespace shardkit {

// Relocation eligibility threshold: a node keeps its assignment unless
// its gain exceeds c. Supports the -inf (no incumbency) and +inf
// (total incumbency) extremes.
class IncumbencyThreshold {
 public:
  static IncumbencyThreshold at(std::int64_t c) { return {Kind::kFinite, c}; }
  static IncumbencyThreshold neg_inf() { return {Kind::kNegInf, 0}; }
  static IncumbencyThreshold pos_inf() { return {Kind::kPosInf, 0}; }

  bool eligible(std::int64_t gain_value) const {
    switch (kind_) {
      case Kind::kNegInf: return true;
      case Kind::kPosInf: return false;
      case Kind::kFinite: return gain_value > c_;
    }
    return false;
  }

  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  std::int64_t value() const { return c_; }

  std::string label() const {
    if (kind_ == Kind::kNegInf) return "neg-inf";
    if (kind_ == Kind::kPosInf) return "pos-inf";
    return std::to_string(c_);
  }

  static IncumbencyThreshold parse(const std::string& text);

 private:
  enum class Kind { kNegInf, kFinite, kPosInf };
  IncumbencyThreshold(Kind kind, std::int64_t c) : kind_(kind), c_(c) {}
  Kind kind_;
  std::int64_t c_;
};

// BLP enqueues eligible nodes by plain gain; SHP variants restrict to the
// same eligible set but prioritize by external gain; KL further admits
// "second-best" nodes (default eligibility -inf) so that locally negative
// swaps with net-positive sums stay available.
enum class QueueMode { kBlp, kShp, kKl };

struct MoveQueueEntry {
  NodeId node;
  std::int64_t priority;  // Eq-(1) gain for BLP, external gain for SHP/KL
};

// One gain-sorted candidate list per ordered shard pair (source, target);
// a node appears in at most one queue (at its single target shard).
class MoveQueueSet {
 public:
  MoveQueueSet(std::uint32_t k) : k_(k), queues_(static_cast<std::size_t>(k) * k) {}

  std::vector<MoveQueueEntry>& queue(ShardId from, ShardId to) {
    return queues_[static_cast<std::size_t>(from) * k_ + to];
  }
  const std::vector<MoveQueueEntry>& queue(ShardId from, ShardId to) const {
    return queues_[static_cast<std::size_t>(from) * k_ + to];
  }
  std::uint32_t k() const { return k_; }
  std::uint64_t total_entries() const;

  // descending priority, ties ascending node id
  void sort_entries();

 private:
  std::uint32_t k_;
  std::vector<std::vector<MoveQueueEntry>> queues_;
};

// Candidate queues against a frozen snapshot of `p`. Target-shard ties
// break to the lowest index when tie_rng is null, seeded-uniform
// otherwise. Entries come out sorted.
MoveQueueSet build_queues(const Graph& g, const Partition& p, QueueMode mode,
                          IncumbencyThreshold c, Rng* tie_rng = nullptr);

}  // namespace shardkit
