#include "shardkit/bounds_check.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shardkit/rng.hpp"

namespace shardkit {

BoundsCheck check_ambivalence_bounds(std::uint32_t k, std::uint64_t degree,
                                     std::uint64_t samples,
                                     std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("bounds require k >= 2");
  if (samples == 0) throw std::invalid_argument("need at least one sample");

  Rng rng(seed);
  std::vector<std::int64_t> counts(k);
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint64_t d = 0; d < degree; ++d)
      ++counts[rng.next_below(k)];
    const std::uint32_t own = static_cast<std::uint32_t>(rng.next_below(k));
    std::int64_t widest = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i == own) continue;
      const std::int64_t diff = counts[i] - counts[own];
      widest = std::max(widest, diff * diff);
    }
    const double value = static_cast<double>(widest);
    sum += value;
    sum_sq += value * value;
  }

  BoundsCheck result;
  const double n = static_cast<double>(samples);
  result.estimate = sum / n;
  const double variance =
      std::max(0.0, sum_sq / n - result.estimate * result.estimate);
  result.std_error = std::sqrt(variance / n);
  const double d = static_cast<double>(degree);
  result.lower = 2.0 * d / static_cast<double>(k);
  result.upper = 2.0 * d * static_cast<double>(k - 1) / static_cast<double>(k);
  result.pass = result.estimate >= result.lower - 3.0 * result.std_error &&
                result.estimate <= result.upper + 3.0 * result.std_error;
  return result;
}

}  // namespace shardkit
