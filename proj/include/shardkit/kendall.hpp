#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shardkit/balance.hpp"
#include "shardkit/graph.hpp"

namespace shardkit {

// Weighted Kendall's tau between two total orders of the same element
// set. Hyperbolic additive rank weights (rank r contributes 1/(r+1)); a
// discordant pair costs the sum of its elements' weights; symmetrized by
// averaging the value computed with each order as the rank reference.
// Runs in O(n log n) via merge-based inversion counting.
double weighted_kendall_tau(std::span<const NodeId> order_a,
                            std::span<const NodeId> order_b);

struct CorrelationMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;  // row-major labels.size()^2

  double at(std::size_t row, std::size_t col) const {
    return values[row * labels.size() + col];
  }
  double at(const std::string& row, const std::string& col) const;
};

// Pairwise weighted tau over the static orders plus the dynamic orders
// captured at iterations 2 and 10 of ambivalence- and gain-driven
// restream runs.
CorrelationMatrix correlate_orders(const Graph& g, const BalanceSpec& spec,
                                   std::uint64_t seed, std::uint32_t iters);

}  // namespace shardkit
