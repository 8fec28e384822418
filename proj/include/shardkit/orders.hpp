#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shardkit/graph.hpp"
#include "shardkit/partition.hpp"

namespace shardkit {

enum class OrderKind { kRandom, kBfs, kDegree, kCc, kGain, kAmbivalence };

bool order_is_dynamic(OrderKind kind);
const char* order_name(OrderKind kind);
OrderKind order_from_name(const std::string& name);

// A visit permutation for the streaming partitioner. Static kinds are
// computed once and reused; dynamic kinds are recomputed per iteration
// from the previous partition and carry the iteration they were built for.
struct StreamOrder {
  std::vector<NodeId> permutation;
  OrderKind kind = OrderKind::kRandom;
  std::uint32_t iteration_of_validity = 0;

  bool is_permutation() const;
};

// Seeded uniform shuffle, persistent across iterations.
StreamOrder order_random(const Graph& g, std::uint64_t seed);

// Breadth-first from the max-degree node (ties: lowest id); neighbors in
// ascending id; on exhausting a component, restarts from the max-degree
// unvisited node.
StreamOrder order_bfs(const Graph& g);

// Decreasing degree, ties ascending id.
StreamOrder order_degree(const Graph& g);

// Decreasing local clustering coefficient, ties ascending id.
StreamOrder order_cc(const Graph& g);

// cc(u) = 2*triangles(u) / (d_u (d_u - 1)), 0 when d_u <= 1.
std::vector<double> local_clustering_coefficients(const Graph& g);

// Dynamic orders, defined relative to the previous iteration's partition;
// callers substitute order_degree on iteration 1.
StreamOrder order_gain(const Graph& g, const Partition& p);         // decreasing
StreamOrder order_ambivalence(const Graph& g, const Partition& p);  // increasing

}  // namespace shardkit
