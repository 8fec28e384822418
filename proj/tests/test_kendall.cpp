#include <doctest.h>

#include <numeric>

#include "shardkit/kendall.hpp"
#include "test_support.hpp"

using namespace shardkit;
using namespace shardkit::testing;

TEST_CASE("weighted tau endpoints") {
  std::vector<NodeId> order(10);
  std::iota(order.begin(), order.end(), NodeId{0});
  CHECK(weighted_kendall_tau(order, order) == doctest::Approx(1.0));

  std::vector<NodeId> reversed(order.rbegin(), order.rend());
  CHECK(weighted_kendall_tau(order, reversed) == doctest::Approx(-1.0));
}

TEST_CASE("weighted tau: adjacent swap against the quadratic oracle") {
  std::vector<NodeId> a = {0, 1, 2, 3, 4};
  std::vector<NodeId> b = {1, 0, 2, 3, 4};
  const double expected = oracle_weighted_tau(a, b);
  CHECK(weighted_kendall_tau(a, b) == doctest::Approx(expected).epsilon(1e-12));
  // a top-rank swap disturbs the weighted measure more than a tail swap
  std::vector<NodeId> tail = {0, 1, 2, 4, 3};
  CHECK(weighted_kendall_tau(a, tail) > weighted_kendall_tau(a, b));
}

TEST_CASE("weighted tau matches the quadratic oracle on random permutations") {
  Rng rng(123);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng.next_below(199);  // up to 200
    std::vector<NodeId> a(n), b(n);
    std::iota(a.begin(), a.end(), NodeId{0});
    std::iota(b.begin(), b.end(), NodeId{0});
    rng.shuffle(a);
    rng.shuffle(b);
    const double fast = weighted_kendall_tau(a, b);
    const double slow = oracle_weighted_tau(a, b);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-10));
    CHECK(fast >= -1.0);
    CHECK(fast <= 1.0);
    CHECK(weighted_kendall_tau(b, a) == doctest::Approx(fast).epsilon(1e-12));
  }
}

TEST_CASE("weighted tau validation") {
  std::vector<NodeId> a = {0, 1, 2};
  std::vector<NodeId> shorter = {0, 1};
  std::vector<NodeId> repeated = {0, 1, 1};
  CHECK_THROWS_AS(weighted_kendall_tau(a, shorter), std::invalid_argument);
  CHECK_THROWS_AS(weighted_kendall_tau(a, repeated), std::invalid_argument);
}

TEST_CASE("order correlation matrix") {
  Graph g = graph_of(clustered_edges(4, 10, 77));
  BalanceSpec spec = BalanceSpec::create(g.node_count(), 4, 0.0);
  CorrelationMatrix matrix = correlate_orders(g, spec, 3, 10);

  REQUIRE(matrix.labels.size() == 8);
  const std::size_t n = matrix.labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(matrix.at(i, i) == doctest::Approx(1.0));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(matrix.at(i, j) == doctest::Approx(matrix.at(j, i)));
      CHECK(matrix.at(i, j) >= -1.0);
      CHECK(matrix.at(i, j) <= 1.0);
    }
  }
  CHECK(matrix.at("degree", "degree") == doctest::Approx(1.0));
  // labels include the dynamic snapshots
  CHECK_NOTHROW(matrix.at("amb-2", "degree"));
  CHECK_NOTHROW(matrix.at("gain-10", "random"));
}
