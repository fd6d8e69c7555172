#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace micut {

// Simple undirected graph, nodes 1..n. Immutable after construction; no
// self-loops, no duplicate edges (duplicates passed in are merged).
class Graph {
 public:
  using Edge = std::pair<int, int>;  // stored with first < second

  Graph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;
  bool is_complete() const {
    return static_cast<long long>(edge_count()) * 2 ==
           static_cast<long long>(node_count_) * (node_count_ - 1);
  }

 private:
  int node_count_;
  std::vector<Edge> edges_;                 // sorted by (min, max), unique
  std::vector<std::vector<int>> adjacency_;  // index 0 unused
};

// Subset of a graph's nodes; members kept sorted and unique.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;

  friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.members_ == b.members_; }
  // Lexicographic on the sorted member lists; the tie-break order used everywhere.
  friend bool operator<(const NodeSet& a, const NodeSet& b) { return a.members_ < b.members_; }

 private:
  std::vector<int> members_;
};

bool is_independent(const Graph& g, const NodeSet& s);
bool is_maximal_independent(const Graph& g, const NodeSet& s);
int cut_size(const Graph& g, const NodeSet& s);
int max_degree(const Graph& g);
NodeSet complement(const Graph& g, const NodeSet& s);

// DIMACS edge format: "p edge <n> <m>" header, then m lines "e <u> <v>",
// comment lines starting with 'c'. Throws ParseError with the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Emits edges sorted by (min endpoint, max endpoint). Comment lines, if any,
// are written verbatim after the header, each prefixed "c ".
std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace micut
