#include <doctest.h>

#include "shardkit/orders.hpp"
#include "test_support.hpp"

using namespace shardkit;
using namespace shardkit::testing;

TEST_CASE("random order: seeded determinism and permutation") {
  Graph g = graph_of(gnp_edges(50, 0.1, 1));
  StreamOrder a = order_random(g, 42);
  StreamOrder b = order_random(g, 42);
  StreamOrder c = order_random(g, 43);
  CHECK(a.permutation == b.permutation);
  CHECK(a.permutation != c.permutation);
  CHECK(a.is_permutation());
  CHECK(c.is_permutation());
}

TEST_CASE("bfs order: path, star, components") {
  // path 0-1-2: root is node 1 (degree 2), neighbors ascend
  Graph path = graph_of(path_edges(3));
  CHECK(order_bfs(path).permutation == std::vector<NodeId>{1, 0, 2});

  // star: center first, leaves ascending
  Graph star = graph_of(star_edges(4));
  CHECK(order_bfs(star).permutation == std::vector<NodeId>{0, 1, 2, 3, 4});

  // two components: all of the higher-max-degree component first
  // component A: star on {0..3} centered at 0; component B: edge {4,5}
  Graph two = graph_of({{0, 1}, {0, 2}, {0, 3}, {4, 5}});
  auto perm = order_bfs(two).permutation;
  CHECK(perm == std::vector<NodeId>{0, 1, 2, 3, 4, 5});
  CHECK(order_bfs(two).is_permutation());
}

TEST_CASE("degree order with ties ascending by id") {
  Graph star = graph_of(star_edges(3));
  CHECK(order_degree(star).permutation == std::vector<NodeId>{0, 1, 2, 3});

  // degrees: 0->1, 1->2, 2->2, 3->1; ties keep id order
  Graph path = graph_of(path_edges(4));
  CHECK(order_degree(path).permutation == std::vector<NodeId>{1, 2, 0, 3});
}

TEST_CASE("clustering coefficients") {
  // triangle with a tail: 0-1-2-0, 2-3
  Graph g = graph_of({{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  auto cc = local_clustering_coefficients(g);
  CHECK(cc[0] == doctest::Approx(1.0));
  CHECK(cc[1] == doctest::Approx(1.0));
  CHECK(cc[2] == doctest::Approx(1.0 / 3.0));
  CHECK(cc[3] == doctest::Approx(0.0));  // degree 1

  // path center has no triangles
  Graph path = graph_of(path_edges(3));
  CHECK(local_clustering_coefficients(path)[1] == doctest::Approx(0.0));

  for (double v : local_clustering_coefficients(graph_of(gnp_edges(40, 0.2, 9)))) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }

  CHECK(order_cc(g).permutation == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("gain and ambivalence orders") {
  Graph g = graph_of(cycle_edges(4));
  Partition adjacent = make_partition(g, {0, 0, 1, 1}, 2);
  Partition opposite = make_partition(g, {0, 1, 0, 1}, 2);

  // all ambivalences equal -> id order
  CHECK(order_ambivalence(g, adjacent).permutation ==
        std::vector<NodeId>{0, 1, 2, 3});

  // higher gain first: pendant node 4 attached to 0 gains least
  Graph g5 = graph_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  Partition p5 = make_partition(g5, {0, 1, 0, 1, 1}, 2);
  auto gain_perm = order_gain(g5, p5).permutation;
  // gains: u0 -> 3, u1..u3 -> 2 (ties by id), u4 -> 1
  CHECK(gain_perm == std::vector<NodeId>{0, 1, 2, 3, 4});

  // strongly negative ambivalence precedes zero/weak ambivalence
  Graph star = graph_of(star_edges(3));
  Partition together = make_partition(star, {0, 0, 0, 0}, 2);
  auto star_amb = order_ambivalence(star, together).permutation;
  CHECK(star_amb.front() == 0);  // center: a = -3, leaves: a = -1

  CHECK(order_gain(g, opposite).is_permutation());
}

TEST_CASE("fully satisfied partition: ambivalence order equals degree order") {
  // two cliques of different sizes, partition-aligned
  EdgeList edges = complete_edges(5);
  for (auto [a, b] : complete_edges(3)) edges.push_back({a + 5, b + 5});
  Graph g = graph_of(edges);
  std::vector<ShardId> assignment(8, 0);
  for (NodeId u = 5; u < 8; ++u) assignment[u] = 1;
  Partition p = make_partition(g, assignment, 2);
  CHECK(order_ambivalence(g, p).permutation == order_degree(g).permutation);
}

TEST_CASE("every order kind emits a permutation") {
  Graph g = graph_of(gnp_edges(30, 0.15, 4));
  Partition p = random_balanced_init(g, BalanceSpec::create(30, 4, 0.0), 2);
  CHECK(order_random(g, 1).is_permutation());
  CHECK(order_bfs(g).is_permutation());
  CHECK(order_degree(g).is_permutation());
  CHECK(order_cc(g).is_permutation());
  CHECK(order_gain(g, p).is_permutation());
  CHECK(order_ambivalence(g, p).is_permutation());
}
