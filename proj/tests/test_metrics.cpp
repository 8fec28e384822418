#include <doctest.h>

#include "shardkit/metrics.hpp"
#include "test_support.hpp"

using namespace shardkit;
using namespace shardkit::testing;

namespace {

const std::vector<ShardId> kSplitAdjacent = {0, 0, 1, 1};  // {0,1 | 2,3}
const std::vector<ShardId> kSplitOpposite = {0, 1, 0, 1};  // {0,2 | 1,3}

}  // namespace

TEST_CASE("balance spec bounds") {
  BalanceSpec s = BalanceSpec::create(5, 2, 0.0);
  CHECK(s.lower == 2);
  CHECK(s.upper == 3);
  CHECK(s.stream_capacity == doctest::Approx(3.0));

  BalanceSpec exact = BalanceSpec::create(8, 4, 0.0);
  CHECK(exact.lower == 2);
  CHECK(exact.upper == 2);

  BalanceSpec loose = BalanceSpec::create(10, 3, 0.5);
  CHECK(loose.lower <= loose.upper);
  CHECK(static_cast<std::uint64_t>(loose.k) * loose.upper >= loose.n);

  CHECK_THROWS_AS(BalanceSpec::create(4, 0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BalanceSpec::create(4, 2, -0.1), std::invalid_argument);
}

TEST_CASE("random balanced init") {
  Graph g4 = graph_of(cycle_edges(4));
  BalanceSpec spec4 = BalanceSpec::create(4, 2, 0.0);
  Partition p = random_balanced_init(g4, spec4, 7);
  CHECK(p.shard_sizes[0] == 2);
  CHECK(p.shard_sizes[1] == 2);
  p.check_sizes();

  Graph g5 = graph_of(cycle_edges(5));
  BalanceSpec spec5 = BalanceSpec::create(5, 2, 0.0);
  Partition q = random_balanced_init(g5, spec5, 7);
  std::vector<std::uint64_t> sizes = q.shard_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{2, 3});
  CHECK(q.within_bounds());

  Partition q2 = random_balanced_init(g5, spec5, 7);
  CHECK(q.assignment == q2.assignment);
  Partition q3 = random_balanced_init(g5, spec5, 8);
  CHECK(q.assignment != q3.assignment);  // w.h.p.

  CHECK_THROWS_AS(
      random_balanced_init(g4, BalanceSpec::create(5, 5, 0.0), 1),
      std::invalid_argument);
}

TEST_CASE("colocation counts on the 4-cycle") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, kSplitAdjacent, 2);
  Partition opposite = make_partition(g, kSplitOpposite, 2);
  CHECK(colocation_counts(g, adjacent, 0) == std::vector<std::int64_t>{1, 1});
  CHECK(colocation_counts(g, opposite, 0) == std::vector<std::int64_t>{0, 2});

  Graph star = graph_of(star_edges(3));
  Partition with_isolated = make_partition(star, {0, 0, 0, 1}, 2);
  // leaf 3's only neighbor is the center; vectors sum to degree
  CHECK(colocation_counts(star, with_isolated, 3) ==
        std::vector<std::int64_t>{1, 0});

  // degree-0 node: zero vector
  Graph lonely = graph_on(3, {{0, 1}});
  Partition lp = make_partition(lonely, {0, 1, 0}, 2);
  CHECK(colocation_counts(lonely, lp, 2) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("gain on the 4-cycle and star") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, kSplitAdjacent, 2);
  Partition opposite = make_partition(g, kSplitOpposite, 2);
  CHECK(gain(g, adjacent, 0) == 0);
  CHECK(gain(g, opposite, 0) == 2);

  Graph star = graph_of(star_edges(4));
  Partition together = make_partition(star, {0, 0, 0, 0, 0}, 2);
  CHECK(gain(star, together, 0) == 0);  // satisfied center
}

TEST_CASE("external gain") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, kSplitAdjacent, 2);
  Partition opposite = make_partition(g, kSplitOpposite, 2);

  ExternalGain e = external_gain(g, adjacent, 0);
  CHECK(e.value == 0);
  CHECK(e.target == 1);

  e = external_gain(g, opposite, 0);
  CHECK(e.value == 2);
  CHECK(e.target == 1);

  Graph star = graph_of(star_edges(3));
  Partition together = make_partition(star, {0, 0, 0, 0}, 2);
  e = external_gain(star, together, 0);
  CHECK(e.value == -3);  // all d neighbors co-located
  CHECK(e.target == 1);

  Partition k1(std::vector<ShardId>(4, 0), BalanceSpec::create(4, 1, 0.0));
  CHECK_THROWS_AS(external_gain(g, k1, 0), std::invalid_argument);
}

TEST_CASE("ambivalence and adjusted ambivalence") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, kSplitAdjacent, 2);
  Partition opposite = make_partition(g, kSplitOpposite, 2);

  CHECK(ambivalence(g, adjacent, 0) == 0);
  CHECK(ambivalence(g, opposite, 0) == -2);
  CHECK(adjusted_ambivalence(g, adjacent, 0) == 0);
  CHECK(adjusted_ambivalence(g, opposite, 0) == 4);

  // degree-0 node
  Graph with_isolated = graph_of({{0, 1}, {2, 2}});  // node 2 only self-loops
  REQUIRE(with_isolated.node_count() == 3);
  Partition p = make_partition(with_isolated, {0, 1, 0}, 2);
  CHECK(ambivalence(with_isolated, p, 2) == 0);

  // all neighbors co-assigned, d = 3
  Graph star = graph_of(star_edges(3));
  Partition together = make_partition(star, {0, 0, 0, 0}, 2);
  CHECK(adjusted_ambivalence(star, together, 0) == 9);

  Partition k1(std::vector<ShardId>(4, 0), BalanceSpec::create(4, 1, 0.0));
  CHECK_THROWS_AS(ambivalence(g, k1, 0), std::invalid_argument);
  CHECK_THROWS_AS(adjusted_ambivalence(g, k1, 0), std::invalid_argument);
}

TEST_CASE("cut size and fraction") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, kSplitAdjacent, 2);
  CHECK(cut_size(g, adjacent) == 2);
  CHECK(internal_edge_fraction(g, adjacent) == doctest::Approx(0.5));

  Partition k1(std::vector<ShardId>(4, 0), BalanceSpec::create(4, 1, 0.0));
  CHECK(internal_edge_fraction(g, k1) == doctest::Approx(1.0));
}

TEST_CASE("metric formulas match brute force on small random graphs") {
  // all 2-shard assignments over graphs with n <= 8
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::uint64_t n = 2 + seed % 7;  // 2..8
    EdgeList edges = gnp_edges(n, 0.4, seed);
    Graph g = graph_of(edges);
    for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
      std::vector<ShardId> assignment(g.node_count());
      for (NodeId u = 0; u < g.node_count(); ++u)
        assignment[u] = (mask >> u) & 1;
      Partition p = make_partition(g, assignment, 2);
      CHECK(cut_size(g, p) == oracle_cut(edges, g, assignment));
      for (NodeId u = 0; u < g.node_count(); ++u) {
        CHECK(gain(g, p, u) == oracle_gain(g, assignment, 2, u));
        CHECK(ambivalence(g, p, u) == oracle_ambivalence(g, assignment, 2, u));
        CHECK(gain(g, p, u) == std::max<std::int64_t>(0, external_gain(g, p, u).value));
        CHECK(adjusted_ambivalence(g, p, u) ==
              ambivalence(g, p, u) * ambivalence(g, p, u));  // k=2 identity
        CHECK(ambivalence(g, p, u) >= -static_cast<std::int64_t>(g.degree(u)));
        CHECK(ambivalence(g, p, u) <= 0);
        CHECK(gain(g, p, u) >= 0);
      }
    }
  }
}

TEST_CASE("cut matches the edge-scan oracle at n=1000") {
  EdgeList edges = gnp_edges(1000, 0.004, 55);
  Graph g = graph_of(edges);
  Rng rng(7);
  std::vector<ShardId> assignment(g.node_count());
  for (auto& s : assignment) s = static_cast<ShardId>(rng.next_below(16));
  Partition p = make_partition(g, assignment, 16);
  CHECK(cut_size(g, p) == oracle_cut(edges, g, assignment));
}

TEST_CASE("unilateral move to the argmax shard drops the cut by the gain") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    Graph g = graph_of(gnp_edges(12, 0.3, seed));
    Rng rng(seed);
    std::vector<ShardId> assignment(g.node_count());
    for (auto& s : assignment) s = static_cast<ShardId>(rng.next_below(3));
    Partition p = make_partition(g, assignment, 3);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const std::int64_t gu = gain(g, p, u);
      auto counts = colocation_counts(g, p, u);
      ShardId argmax = 0;
      for (ShardId i = 1; i < 3; ++i)
        if (counts[i] > counts[argmax]) argmax = i;
      Partition moved = p;
      const std::uint64_t before = cut_size(g, moved);
      moved.move(u, argmax);
      moved.check_sizes();
      const std::uint64_t after = cut_size(g, moved);
      CHECK(static_cast<std::int64_t>(before) - static_cast<std::int64_t>(after) == gu);
    }
  }
}

TEST_CASE("shard sizes stay consistent under move sequences") {
  Graph g = graph_of(gnp_edges(15, 0.25, 3));
  Partition p = random_balanced_init(g, BalanceSpec::create(15, 4, 1.0), 5);
  Rng rng(11);
  for (int step = 0; step < 200; ++step) {
    NodeId u = static_cast<NodeId>(rng.next_below(g.node_count()));
    ShardId to = static_cast<ShardId>(rng.next_below(4));
    p.move(u, to);
  }
  p.check_sizes();
}

TEST_CASE("periodicity") {
  PartitionHistory hist;
  Graph g = graph_of(path_edges(2));
  BalanceSpec spec = BalanceSpec::create(2, 2, 1e9);

  auto record = [&](ShardId s0, ShardId s1) {
    hist.record(Partition({s0, s1}, spec));
  };

  record(0, 0);             // t=1: A
  record(1, 0);             // t=2: B for node 0, A again for node 1
  CHECK(periodicity(hist, 2, 0) == std::nullopt);  // assignments A,B -> NEW
  CHECK(periodicity(hist, 2, 1) == 1);             // A,A -> period 1
  record(0, 0);             // t=3: A,B,A for node 0
  CHECK(periodicity(hist, 3, 0) == 2);
  CHECK_THROWS_AS(periodicity(hist, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(periodicity(hist, 0, 0), std::out_of_range);
}

TEST_CASE("periodicity histogram") {
  Graph g = graph_of(cycle_edges(4));
  PartitionHistory hist;
  Partition p = make_partition(g, {0, 0, 1, 1}, 2);
  hist.record(p);
  PeriodicityHistogram h1 = periodicity_histogram(hist, 1);
  CHECK(h1.fresh == doctest::Approx(1.0));
  CHECK(h1.sum() == doctest::Approx(1.0).epsilon(1e-12));

  hist.record(p);  // unchanged
  PeriodicityHistogram h2 = periodicity_histogram(hist, 2);
  CHECK(h2.period1 == doctest::Approx(1.0));
  CHECK(h2.sum() == doctest::Approx(1.0).epsilon(1e-12));

  Partition q = make_partition(g, {1, 0, 0, 1}, 2);
  hist.record(q);
  PeriodicityHistogram h3 = periodicity_histogram(hist, 3);
  CHECK(h3.sum() == doctest::Approx(1.0).epsilon(1e-12));
}
