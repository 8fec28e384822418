#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "shardkit/graph.hpp"
#include "test_support.hpp"

using namespace shardkit;
using namespace shardkit::testing;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "shardkit_test_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("edge list: dedup, loop drop, reciprocation") {
  TempFile file("0 1\n1 0\n1 1\n0 2");
  Graph g = load_edge_list(file.path);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count == 2);
  auto n0 = g.neighbors(0);
  REQUIRE(n0.size() == 2);
  CHECK(n0[0] == 1);
  CHECK(n0[1] == 2);
  g.check_invariants();
}

TEST_CASE("edge list: id remap in first-appearance order") {
  TempFile file("5 9\n9 5");
  Graph g = load_edge_list(file.path);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count == 1);
  CHECK(g.id_map[0] == 5);
  CHECK(g.id_map[1] == 9);
}

TEST_CASE("edge list: comments and whitespace") {
  TempFile file("# header\n# another\n0\t1\n  2 3  \n\n1 2\n");
  Graph g = load_edge_list(file.path);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count == 3);
}

TEST_CASE("edge list: malformed line names the line number") {
  TempFile file("0 1\n2 x\n");
  CHECK_THROWS_AS(load_edge_list(file.path), ParseError);
  try {
    load_edge_list(file.path);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("edge list: missing token is a parse error") {
  TempFile file("0 1\n3\n");
  CHECK_THROWS_AS(load_edge_list(file.path), ParseError);
}

TEST_CASE("edge list: empty inputs") {
  TempFile no_edges("# only a comment\n");
  CHECK_THROWS_AS(load_edge_list(no_edges.path), EmptyGraphError);
  TempFile only_loops("3 3\n7 7\n");
  CHECK_THROWS_AS(load_edge_list(only_loops.path), EmptyGraphError);
}

TEST_CASE("loading twice is deterministic") {
  TempFile file("4 2\n2 4\n9 4\n2 9\n0 9\n");
  Graph a = load_edge_list(file.path);
  Graph b = load_edge_list(file.path);
  CHECK(a.offsets == b.offsets);
  CHECK(a.adjacency == b.adjacency);
  CHECK(a.id_map == b.id_map);
}

TEST_CASE("graph invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = graph_of(gnp_edges(20, 0.2, seed));
    g.check_invariants();
    std::uint64_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      CHECK(g.degree(u) == g.offsets[u + 1] - g.offsets[u]);
      degree_sum += g.degree(u);
    }
    CHECK(degree_sum == 2 * g.edge_count);
  }
}

TEST_CASE("stats: 4-cycle") {
  Graph g = graph_of(cycle_edges(4));
  GraphStats s = graph_stats(g);
  CHECK(s.n == 4);
  CHECK(s.m == 4);
  CHECK(s.avg_degree == doctest::Approx(2.0));
  CHECK(s.lcc_fraction == doctest::Approx(1.0));
}

TEST_CASE("stats: two disjoint edges") {
  Graph g = graph_of({{0, 1}, {2, 3}});
  GraphStats s = graph_stats(g);
  CHECK(s.lcc_fraction == doctest::Approx(0.5));
  CHECK(s.m == 2);
}
