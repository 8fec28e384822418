#include "shardkit/orders.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "shardkit/metrics.hpp"
#include "shardkit/rng.hpp"

namespace shardkit {

bool order_is_dynamic(OrderKind kind) {
  return kind == OrderKind::kGain || kind == OrderKind::kAmbivalence;
}

const char* order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::kRandom: return "random";
    case OrderKind::kBfs: return "bfs";
    case OrderKind::kDegree: return "degree";
    case OrderKind::kCc: return "cc";
    case OrderKind::kGain: return "gain";
    case OrderKind::kAmbivalence: return "ambivalence";
  }
  return "?";
}

OrderKind order_from_name(const std::string& name) {
  if (name == "random") return OrderKind::kRandom;
  if (name == "bfs") return OrderKind::kBfs;
  if (name == "degree") return OrderKind::kDegree;
  if (name == "cc") return OrderKind::kCc;
  if (name == "gain") return OrderKind::kGain;
  if (name == "ambivalence") return OrderKind::kAmbivalence;
  throw std::invalid_argument("unknown stream order: " + name);
}

bool StreamOrder::is_permutation() const {
  std::vector<bool> seen(permutation.size(), false);
  for (NodeId u : permutation) {
    if (u >= permutation.size() || seen[u]) return false;
    seen[u] = true;
  }
  return true;
}

namespace {

// Sort node ids by key descending, ties ascending id. Stable sort on ids
// already in ascending order gives the tie rule for free.
template <class Key>
StreamOrder sorted_order(const Graph& g, OrderKind kind, const Key& key,
                         bool descending) {
  StreamOrder order;
  order.kind = kind;
  order.permutation.resize(g.node_count());
  std::iota(order.permutation.begin(), order.permutation.end(), NodeId{0});
  std::stable_sort(order.permutation.begin(), order.permutation.end(),
                   [&](NodeId a, NodeId b) {
                     return descending ? key[a] > key[b] : key[a] < key[b];
                   });
  return order;
}

}  // namespace

StreamOrder order_random(const Graph& g, std::uint64_t seed) {
  StreamOrder order;
  order.kind = OrderKind::kRandom;
  order.permutation.resize(g.node_count());
  std::iota(order.permutation.begin(), order.permutation.end(), NodeId{0});
  Rng rng(seed);
  rng.shuffle(order.permutation);
  return order;
}

StreamOrder order_bfs(const Graph& g) {
  const NodeId n = g.node_count();
  StreamOrder order;
  order.kind = OrderKind::kBfs;
  order.permutation.reserve(n);

  // roots by decreasing degree, ties ascending id
  std::vector<NodeId> roots(n);
  std::iota(roots.begin(), roots.end(), NodeId{0});
  std::stable_sort(roots.begin(), roots.end(), [&](NodeId a, NodeId b) {
    return g.degree(a) > g.degree(b);
  });

  std::vector<bool> visited(n, false);
  std::queue<NodeId> frontier;
  for (NodeId root : roots) {
    if (visited[root]) continue;
    visited[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      order.permutation.push_back(u);
      for (NodeId v : g.neighbors(u)) {  // neighbor lists sorted ascending
        if (!visited[v]) {
          visited[v] = true;
          frontier.push(v);
        }
      }
    }
  }
  return order;
}

StreamOrder order_degree(const Graph& g) {
  std::vector<std::uint64_t> deg(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) deg[u] = g.degree(u);
  return sorted_order(g, OrderKind::kDegree, deg, /*descending=*/true);
}

std::vector<double> local_clustering_coefficients(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint64_t> triangles(n, 0);

  // Orient edges toward higher (degree, id) and intersect out-lists; each
  // triangle is found exactly once and credited to all three corners.
  auto precedes = [&](NodeId a, NodeId b) {
    auto da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::uint64_t> out_offsets(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if (precedes(u, v)) ++out_offsets[u + 1];
  for (NodeId u = 0; u < n; ++u) out_offsets[u + 1] += out_offsets[u];
  std::vector<NodeId> out_adj(out_offsets[n]);
  {
    std::vector<std::uint64_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v : g.neighbors(u))
        if (precedes(u, v)) out_adj[cursor[u]++] = v;
  }
  auto out_list = [&](NodeId u) {
    return std::span<const NodeId>{out_adj.data() + out_offsets[u],
                                   static_cast<std::size_t>(out_offsets[u + 1] - out_offsets[u])};
  };
  for (NodeId u = 0; u < n; ++u) {
    auto lu = out_list(u);
    for (NodeId v : lu) {
      auto lv = out_list(v);
      // merge-intersect sorted out-lists
      std::size_t i = 0, j = 0;
      while (i < lu.size() && j < lv.size()) {
        if (lu[i] < lv[j]) ++i;
        else if (lu[i] > lv[j]) ++j;
        else {
          ++triangles[u];
          ++triangles[v];
          ++triangles[lu[i]];
          ++i;
          ++j;
        }
      }
    }
  }

  std::vector<double> cc(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    const double d = static_cast<double>(g.degree(u));
    if (d > 1.0)
      cc[u] = 2.0 * static_cast<double>(triangles[u]) / (d * (d - 1.0));
  }
  return cc;
}

StreamOrder order_cc(const Graph& g) {
  return sorted_order(g, OrderKind::kCc, local_clustering_coefficients(g),
                      /*descending=*/true);
}

StreamOrder order_gain(const Graph& g, const Partition& p) {
  std::vector<std::int64_t> keys(g.node_count());
  ColocationCounter counter(p.spec.k);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    counter.count(g, p, u);
    keys[u] = gain_from_counts(counter, p.shard_of(u));
  }
  return sorted_order(g, OrderKind::kGain, keys, /*descending=*/true);
}

StreamOrder order_ambivalence(const Graph& g, const Partition& p) {
  if (p.spec.k < 2)
    throw std::invalid_argument("ambivalence order needs k >= 2");
  std::vector<std::int64_t> keys(g.node_count());
  ColocationCounter counter(p.spec.k);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    counter.count(g, p, u);
    keys[u] = ambivalence_from_counts(counter, p.shard_of(u));
  }
  return sorted_order(g, OrderKind::kAmbivalence, keys, /*descending=*/false);
}

}  // namespace shardkit
