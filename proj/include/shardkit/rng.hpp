#pragma once

#include <cstdint>
#include <vector>

namespace shardkit {

// Deterministic 64-bit generator (splitmix64 core). We avoid <random>
// distributions because their output is implementation-defined; every
// reported number must reproduce bit-for-bit across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // rejection sampling on the top of the range
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  double next_double() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream for trial `stream` of a run seeded with `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xa0761d6478bd642fULL * (stream + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

// Streaming argmax tie-breaker: keeps the first-seen candidate in
// deterministic mode (rng == nullptr), or a uniformly chosen one among
// all tied candidates otherwise (reservoir rule).
class TiePicker {
 public:
  explicit TiePicker(Rng* rng) : rng_(rng) {}

  // Returns true when `candidate` should replace the current pick, given
  // that it ties the best value seen so far.
  bool take_tied() {
    ++ties_;
    if (rng_ == nullptr) return false;
    return rng_->next_below(ties_) == 0;
  }

  void reset() { ties_ = 1; }

 private:
  Rng* rng_;
  std::uint64_t ties_ = 1;
};

}  // namespace shardkit
