#include "micut/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "micut/errors.hpp"

namespace micut {

Graph::Graph(int node_count, std::vector<Edge> edges) : node_count_(node_count) {
  if (node_count_ <= 0) throw std::invalid_argument("graph needs at least one node");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    if (u < 1 || u > node_count_ || v < 1 || v > node_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(node_count_ + 1, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

NodeSet::NodeSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

void check_valid(const Graph& g, const NodeSet& s) {
  if (!s.empty() && (s.members().front() < 1 || s.members().back() > g.node_count()))
    throw std::invalid_argument("node set member outside 1..n");
}

}  // namespace

bool is_independent(const Graph& g, const NodeSet& s) {
  check_valid(g, s);
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const NodeSet& s) {
  if (!is_independent(g, s)) return false;
  for (int v = 1; v <= g.node_count(); ++v) {
    if (s.contains(v)) continue;
    bool covered = false;
    for (int u : g.neighbors(v)) {
      if (s.contains(u)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;  // v could be added
  }
  return true;
}

int cut_size(const Graph& g, const NodeSet& s) {
  check_valid(g, s);
  int crossing = 0;
  for (const auto& [u, v] : g.edges())
    if (s.contains(u) != s.contains(v)) ++crossing;
  return crossing;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 1; v <= g.node_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

NodeSet complement(const Graph& g, const NodeSet& s) {
  std::vector<int> out;
  for (int v = 1; v <= g.node_count(); ++v)
    if (!s.contains(v)) out.push_back(v);
  return NodeSet(std::move(out));
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, declared_m = -1;
  std::vector<Graph::Edge> edges;
  long long seen_edges = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      n = parse_ll(toks[2], line_no, "node count");
      declared_m = parse_ll(toks[3], line_no, "edge count");
      if (n < 1) throw ParseError(line_no, "node count must be positive");
      if (declared_m < 0) throw ParseError(line_no, "edge count must be nonnegative");
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before 'p edge' header");
      if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      long long u = parse_ll(toks[1], line_no, "endpoint");
      long long v = parse_ll(toks[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
      ++seen_edges;
      if (seen_edges > declared_m) throw ParseError(line_no, "more edge lines than declared");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      continue;
    }
    throw ParseError(line_no, "unrecognized line '" + toks[0] + " ...'");
  }
  if (n < 0) throw ParseError(0, "missing 'p edge' header");
  if (seen_edges < declared_m)
    throw ParseError(line_no, "declared " + std::to_string(declared_m) + " edges, found " +
                                  std::to_string(seen_edges));
  return Graph(static_cast<int>(n), std::move(edges));  // duplicates merged here
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& c : comments) out << "c " << c << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace micut
