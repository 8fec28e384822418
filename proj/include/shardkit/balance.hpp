#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace shardkit {

// Shard-count / imbalance contract shared by all partitioners.
//
// lower/upper bound the size of every shard; stream_capacity is the
// per-shard admission cap used by the streaming assignment rule,
// C = (1+eps) * ceil(n/k). The nominal lower bound ceil((1-eps)*n/k) is
// clamped to floor(n/k) so that an exactly balanced partition is always
// feasible; at eps=0 the bounds come out as [floor(n/k), ceil(n/k)].
struct BalanceSpec {
  std::uint32_t k = 1;
  double epsilon = 0.0;
  std::uint64_t n = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  double stream_capacity = 0.0;

  static BalanceSpec create(std::uint64_t n, std::uint32_t k, double epsilon) {
    if (k == 0) throw std::invalid_argument("shard count k must be >= 1");
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
    if (n == 0) throw std::invalid_argument("empty node set");
    BalanceSpec s;
    s.k = k;
    s.epsilon = epsilon;
    s.n = n;
    const double per_shard = static_cast<double>(n) / static_cast<double>(k);
    const std::uint64_t floor_nk = n / k;
    const std::uint64_t ceil_nk = (n + k - 1) / k;
    const auto nominal_lower =
        static_cast<std::uint64_t>(std::ceil((1.0 - epsilon) * per_shard));
    s.lower = std::min(nominal_lower, floor_nk);
    s.upper = static_cast<std::uint64_t>(std::ceil((1.0 + epsilon) * per_shard));
    s.upper = std::max(s.upper, ceil_nk);  // k*upper >= n must hold
    s.stream_capacity = (1.0 + epsilon) * static_cast<double>(ceil_nk);
    return s;
  }

  // Streaming admission cap: shards at or above this count reject nodes.
  std::uint64_t stream_capacity_ceil() const {
    return static_cast<std::uint64_t>(std::ceil(stream_capacity));
  }
};

}  // namespace shardkit
