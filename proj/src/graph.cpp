#include "shardkit/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <unordered_map>

namespace shardkit {

std::uint64_t Graph::max_degree() const {
  std::uint64_t best = 0;
  for (NodeId u = 0; u < node_count(); ++u) best = std::max(best, degree(u));
  return best;
}

void Graph::check_invariants() const {
  const NodeId n = node_count();
  if (offsets.size() != static_cast<std::size_t>(n) + 1)
    throw std::logic_error("offset array size mismatch");
  if (offsets[0] != 0 || offsets[n] != adjacency.size())
    throw std::logic_error("offset endpoints inconsistent");
  std::uint64_t degree_sum = 0;
  for (NodeId u = 0; u < n; ++u) {
    auto nbrs = neighbors(u);
    degree_sum += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n) throw std::logic_error("neighbor id out of range");
      if (nbrs[i] == u) throw std::logic_error("self-loop present");
      if (i > 0 && nbrs[i - 1] >= nbrs[i])
        throw std::logic_error("neighbor list not strictly ascending");
      // symmetry: u must appear in the neighbor's list
      auto other = neighbors(nbrs[i]);
      if (!std::binary_search(other.begin(), other.end(), u))
        throw std::logic_error("adjacency not symmetric");
    }
  }
  if (degree_sum != 2 * edge_count)
    throw std::logic_error("degree sum != 2m");
}

namespace {

// Accumulates raw original-id pairs, remapping ids to dense 0..n-1 in
// first-appearance order; finish() reciprocates, drops loops, merges
// parallels and builds the sorted CSR.
class GraphBuilder {
 public:
  void add(std::uint64_t a, std::uint64_t b) {
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) return;  // self-loop
    undirected_.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool saw_anything() const { return !id_map_.empty(); }

  Graph finish() {
    std::sort(undirected_.begin(), undirected_.end());
    undirected_.erase(std::unique(undirected_.begin(), undirected_.end()),
                      undirected_.end());
    if (undirected_.empty())
      throw EmptyGraphError("edge list reduces to zero edges");

    const NodeId n = static_cast<NodeId>(id_map_.size());
    Graph g;
    g.id_map = std::move(id_map_);
    g.edge_count = undirected_.size();
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : undirected_) {
      ++g.offsets[u + 1];
      ++g.offsets[v + 1];
    }
    for (NodeId u = 0; u < n; ++u) g.offsets[u + 1] += g.offsets[u];

    g.adjacency.resize(2 * g.edge_count);
    std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [u, v] : undirected_) {
      g.adjacency[cursor[u]++] = v;
      g.adjacency[cursor[v]++] = u;
    }
    undirected_.clear();
    undirected_.shrink_to_fit();
    for (NodeId u = 0; u < n; ++u) {
      std::sort(g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets[u]),
                g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets[u + 1]));
    }
    return g;
  }

 private:
  NodeId intern(std::uint64_t original) {
    auto [it, inserted] =
        remap_.try_emplace(original, static_cast<NodeId>(id_map_.size()));
    if (inserted) id_map_.push_back(original);
    return it->second;
  }

  std::unordered_map<std::uint64_t, NodeId> remap_;
  std::vector<std::uint64_t> id_map_;
  std::vector<std::pair<NodeId, NodeId>> undirected_;
};

}  // namespace

Graph graph_from_edges(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  if (edges.empty()) throw EmptyGraphError("edge list holds no edges");
  GraphBuilder builder;
  for (const auto& [a, b] : edges) builder.add(a, b);
  return builder.finish();
}

namespace {

// Buffered tokenizer for large SNAP files; line-accurate error reporting.
class EdgeListReader {
 public:
  explicit EdgeListReader(const std::string& path)
      : file_(std::fopen(path.c_str(), "rb")) {
    if (file_ == nullptr)
      throw std::runtime_error("cannot open edge list: " + path);
  }
  ~EdgeListReader() {
    if (file_ != nullptr) std::fclose(file_);
  }
  EdgeListReader(const EdgeListReader&) = delete;
  EdgeListReader& operator=(const EdgeListReader&) = delete;

  // Returns false at end of input.
  bool next_edge(std::uint64_t& a, std::uint64_t& b) {
    for (;;) {
      if (!fill_line()) return false;
      ++line_no_;
      const char* p = line_.data();
      const char* end = p + line_.size();
      p = skip_space(p, end);
      if (p == end) continue;       // blank line
      if (*p == '#') continue;      // comment
      a = parse_uint(p, end);
      p = skip_space(p, end);
      b = parse_uint(p, end);
      p = skip_space(p, end);
      if (p != end)
        throw ParseError("trailing data on line " + std::to_string(line_no_),
                         line_no_);
      return true;
    }
  }

  std::uint64_t line_number() const { return line_no_; }

 private:
  bool fill_line() {
    line_.clear();
    int c;
    while ((c = std::getc(file_)) != EOF) {
      if (c == '\n') return true;
      if (c != '\r') line_.push_back(static_cast<char>(c));
    }
    return !line_.empty();
  }

  static const char* skip_space(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
  }

  std::uint64_t parse_uint(const char*& p, const char* end) {
    if (p == end || *p < '0' || *p > '9')
      throw ParseError("expected integer on line " + std::to_string(line_no_),
                       line_no_);
    std::uint64_t value = 0;
    while (p != end && *p >= '0' && *p <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(*p - '0');
      ++p;
    }
    if (p != end && *p != ' ' && *p != '\t')
      throw ParseError("malformed integer on line " + std::to_string(line_no_),
                       line_no_);
    return value;
  }

  std::FILE* file_;
  std::string line_;
  std::uint64_t line_no_ = 0;
};

}  // namespace

Graph load_edge_list(const std::string& path) {
  EdgeListReader reader(path);
  GraphBuilder builder;
  std::uint64_t a, b;
  while (reader.next_edge(a, b)) builder.add(a, b);
  if (!builder.saw_anything()) throw EmptyGraphError("no edges in " + path);
  return builder.finish();
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.n = g.node_count();
  s.m = g.edge_count;
  s.avg_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n);

  // largest connected component by iterative BFS
  const NodeId n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  std::uint64_t largest = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::uint64_t size = 0;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    largest = std::max(largest, size);
  }
  s.lcc_fraction = n == 0 ? 0.0 : static_cast<double>(largest) / static_cast<double>(n);
  return s;
}

}  // namespace shardkit
