#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shardkit {

using NodeId = std::uint32_t;

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::uint64_t line_number)
      : std::runtime_error(msg), line(line_number) {}
  std::uint64_t line;
};

struct EmptyGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph in compressed adjacency form.
// Nodes carry dense ids 0..n-1 assigned in order of first appearance in
// the input; id_map recovers the original file ids. Neighbor lists are
// sorted ascending, self-free and duplicate-free; every edge appears in
// both endpoint lists.
struct Graph {
  std::vector<std::uint64_t> offsets;   // n+1 entries into adjacency
  std::vector<NodeId> adjacency;        // 2m neighbor ids
  std::vector<std::uint64_t> id_map;    // dense id -> original id
  std::uint64_t edge_count = 0;         // m, each undirected edge once

  NodeId node_count() const { return static_cast<NodeId>(id_map.size()); }

  std::uint64_t degree(NodeId u) const { return offsets[u + 1] - offsets[u]; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency.data() + offsets[u],
            static_cast<std::size_t>(offsets[u + 1] - offsets[u])};
  }

  std::uint64_t max_degree() const;

  // Full-scan structural check (symmetry, sortedness, no loops/dups,
  // degree sum). Throws std::logic_error on violation; meant for tests
  // and post-load validation, not hot paths.
  void check_invariants() const;
};

// Builds a Graph from raw (original-id) edge pairs: reciprocates, drops
// self-loops, merges parallel edges, remaps ids by first appearance.
// Order of appearance is the token scan order of `edges`.
Graph graph_from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

// SNAP-style edge list: '#' comment lines, otherwise two whitespace
// separated non-negative integers per line.
Graph load_edge_list(const std::string& path);

struct GraphStats {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double avg_degree = 0.0;   // 2m/n
  double lcc_fraction = 0.0; // nodes in largest connected component / n
};

GraphStats graph_stats(const Graph& g);

}  // namespace shardkit
