#pragma once

#include <cstdint>

namespace shardkit {

// Monte-Carlo check of the expected initial squared-gap ambivalence of a
// degree-d node under uniform random shard labels: the mean must land in
// [(2/k) d, (2(k-1)/k) d] up to three standard errors.
struct BoundsCheck {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double std_error = 0.0;
  bool pass = false;
};

BoundsCheck check_ambivalence_bounds(std::uint32_t k, std::uint64_t degree,
                                     std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace shardkit
