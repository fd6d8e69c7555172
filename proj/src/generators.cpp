#include "micut/generators.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "micut/rng.hpp"

namespace micut {

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Graph::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph(n, std::move(edges));
}

Graph gen_star(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Graph::Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Graph(n, std::move(edges));
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Graph::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_connected_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("connected gnp needs n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Graph::Edge> edges;
  // Random recursive tree first, then independent extra edges.
  for (int v = 2; v <= n; ++v) edges.emplace_back(rng.range(1, v - 1), v);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

namespace {

// One greedy pass; fails (nullopt) when the random choices strand occurrence
// budget on a single variable before all m clauses are placed.
std::optional<std::vector<Clause>> try_build_m2sat(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> occ(2 * static_cast<std::size_t>(n) + 2, 0);
  auto slot = [](int lit) { return lit > 0 ? 2 * lit : -2 * lit + 1; };
  std::vector<Clause> clauses;
  for (int j = 0; j < m; ++j) {
    // All (l1, l2) with distinct variables and both occurrence budgets open.
    std::vector<Clause> options;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        for (int la : {a, -a}) {
          if (occ[slot(la)] >= 3) continue;
          for (int lb : {b, -b}) {
            if (occ[slot(lb)] >= 3) continue;
            options.push_back({la, lb});
          }
        }
      }
    }
    if (options.empty()) return std::nullopt;
    Clause pick = options[rng.below(options.size())];
    ++occ[slot(pick.first)];
    ++occ[slot(pick.second)];
    clauses.push_back(pick);
  }
  return clauses;
}

}  // namespace

Max2SatInstance gen_rand_m2sat(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("rand-m2sat needs n >= 2");
  if (m < 1) throw std::invalid_argument("rand-m2sat needs m >= 1");
  if (m > 3 * n) throw std::invalid_argument("m > 3n violates the occurrence bound");
  for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
    if (auto clauses = try_build_m2sat(n, m, Rng::derive(seed, attempt)))
      return Max2SatInstance::make(n, std::move(*clauses));
  }
  throw std::invalid_argument("cannot place " + std::to_string(m) + " clauses over " +
                              std::to_string(n) + " variables; reduce m");
}

}  // namespace micut
