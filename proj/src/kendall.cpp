#include "shardkit/kendall.hpp"

#include <algorithm>
#include <stdexcept>

#include "shardkit/streaming.hpp"

namespace shardkit {

namespace {

struct Ranked {
  std::uint32_t position;  // rank in the comparison order
  double weight;           // reference weight of the element
};

// Total weight of discordant pairs, each counted as the sum of its two
// elements' weights: merge sort over the comparison ranks; when an
// element from the right half precedes remaining left elements, the pair
// weights accumulate.
double discordant_weight(std::vector<Ranked>& seq, std::vector<Ranked>& scratch,
                         std::size_t lo, std::size_t hi) {
  if (hi - lo <= 1) return 0.0;
  const std::size_t mid = lo + (hi - lo) / 2;
  double total = discordant_weight(seq, scratch, lo, mid) +
                 discordant_weight(seq, scratch, mid, hi);

  // suffix weight sums of the left half for O(1) "remaining weight"
  double left_remaining = 0.0;
  for (std::size_t i = lo; i < mid; ++i) left_remaining += seq[i].weight;

  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (seq[i].position <= seq[j].position) {
      left_remaining -= seq[i].weight;
      scratch[out++] = seq[i++];
    } else {
      // seq[j] is discordant with every remaining left element
      total += left_remaining +
               seq[j].weight * static_cast<double>(mid - i);
      scratch[out++] = seq[j++];
    }
  }
  while (i < mid) scratch[out++] = seq[i++];
  while (j < hi) scratch[out++] = seq[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            seq.begin() + static_cast<std::ptrdiff_t>(lo));
  return total;
}

// Tau with `reference` providing the rank weights and `other` providing
// the comparison ranks.
double one_sided_tau(std::span<const NodeId> reference,
                     std::span<const NodeId> other) {
  const std::size_t n = reference.size();
  if (n < 2) return 1.0;

  std::vector<std::uint32_t> rank_in_other(n);
  for (std::size_t r = 0; r < n; ++r)
    rank_in_other[other[r]] = static_cast<std::uint32_t>(r);

  std::vector<Ranked> seq(n);
  double total_weight = 0.0;  // sum of element weights
  for (std::size_t r = 0; r < n; ++r) {
    const double w = 1.0 / static_cast<double>(r + 1);
    seq[r] = {rank_in_other[reference[r]], w};
    total_weight += w;
  }

  std::vector<Ranked> scratch(n);
  const double discordant = discordant_weight(seq, scratch, 0, n);
  // every element participates in n-1 pairs
  const double all_pairs = total_weight * static_cast<double>(n - 1);
  return (all_pairs - 2.0 * discordant) / all_pairs;
}

void validate_permutations(std::span<const NodeId> a,
                           std::span<const NodeId> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("order length mismatch");
  std::vector<bool> seen_a(a.size(), false), seen_b(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= a.size() || seen_a[a[i]])
      throw std::invalid_argument("first order is not a permutation");
    if (b[i] >= b.size() || seen_b[b[i]])
      throw std::invalid_argument("second order is not a permutation");
    seen_a[a[i]] = true;
    seen_b[b[i]] = true;
  }
}

}  // namespace

double weighted_kendall_tau(std::span<const NodeId> order_a,
                            std::span<const NodeId> order_b) {
  validate_permutations(order_a, order_b);
  const double tau = 0.5 * (one_sided_tau(order_a, order_b) +
                            one_sided_tau(order_b, order_a));
  return std::clamp(tau, -1.0, 1.0);  // guard float rounding at the ends
}

double CorrelationMatrix::at(const std::string& row,
                             const std::string& col) const {
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return i;
    throw std::invalid_argument("unknown order label: " + name);
  };
  return at(find(row), find(col));
}

CorrelationMatrix correlate_orders(const Graph& g, const BalanceSpec& spec,
                                   std::uint64_t seed, std::uint32_t iters) {
  std::vector<std::pair<std::string, std::vector<NodeId>>> orders;
  orders.emplace_back("random", order_random(g, seed).permutation);
  orders.emplace_back("cc", order_cc(g).permutation);
  orders.emplace_back("bfs", order_bfs(g).permutation);
  orders.emplace_back("degree", order_degree(g).permutation);

  const std::uint32_t late = std::max<std::uint32_t>(iters, 2);
  RunOptions options;
  options.track_periodicity = false;
  for (OrderKind kind : {OrderKind::kAmbivalence, OrderKind::kGain}) {
    auto captured = restream_orders_at(g, kind, spec,
                                       IncumbencyThreshold::neg_inf(), late,
                                       seed, /*trial_index=*/0, {2, late},
                                       options);
    const std::string prefix =
        kind == OrderKind::kAmbivalence ? "amb" : "gain";
    for (const StreamOrder& order : captured) {
      orders.emplace_back(
          prefix + "-" + std::to_string(order.iteration_of_validity),
          order.permutation);
    }
  }

  CorrelationMatrix matrix;
  const std::size_t count = orders.size();
  matrix.values.assign(count * count, 1.0);
  for (const auto& [label, _] : orders) matrix.labels.push_back(label);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double tau = weighted_kendall_tau(orders[i].second, orders[j].second);
      matrix.values[i * count + j] = tau;
      matrix.values[j * count + i] = tau;
    }
  }
  return matrix;
}

}  // namespace shardkit
