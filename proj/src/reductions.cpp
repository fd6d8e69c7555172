#include "micut/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "micut/errors.hpp"
#include "micut/rng.hpp"

namespace micut {

Graph reduce_mis_to_micut(const Graph& g) {
  int n = g.node_count();
  if (n < 2) throw PreconditionError("reduce_mis_to_micut needs at least 2 nodes");
  if (g.is_complete())
    throw PreconditionError(
        "reduce_mis_to_micut requires a non-complete input graph (its maximum independent "
        "set must have at least two members)");
  if (n > 80)  // the construction needs ~n^4/2 edges
    throw LimitError("reduce_mis_to_micut: n = " + std::to_string(n) +
                     " would construct about n^4/2 edges; practical limit is 80");
  int total = n * n + n;
  std::vector<Graph::Edge> edges = g.edges();
  edges.reserve(edges.size() + static_cast<std::size_t>(n) * n * (n * n - 1) / 2 +
                static_cast<std::size_t>(n) * n * n);
  for (int i = n + 1; i <= total; ++i)
    for (int j = i + 1; j <= total; ++j) edges.emplace_back(i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = n + 1; j <= total; ++j) edges.emplace_back(i, j);
  return Graph(total, std::move(edges));
}

NodeSet brute_force_mis(const Graph& g, int exhaustive_limit) {
  if (g.node_count() > exhaustive_limit)
    throw LimitError("brute_force_mis: " + std::to_string(g.node_count()) +
                     " nodes exceed the exhaustive limit " + std::to_string(exhaustive_limit));
  if (g.node_count() > 64) throw LimitError("brute_force_mis supports at most 64 nodes");
  std::uint64_t best_mask = 0;
  int best_size = -1;
  for_each_maximal_independent_set(g, [&](std::uint64_t mask) {
    int size = std::popcount(mask);
    bool better = size > best_size;
    if (size == best_size) {
      std::uint64_t d = mask ^ best_mask;
      better = d != 0 && ((mask >> std::countr_zero(d)) & 1);
    }
    if (better) {
      best_mask = mask;
      best_size = size;
    }
  });
  return set_from_mask(best_mask);
}

NodeSet recover_mis(const Graph& g, const IndependentCutSolution& c, int mis_limit) {
  for (int v : c.set.members())
    if (v > g.node_count())
      throw CertificateError("recovered set contains added node " + std::to_string(v) +
                             "; the provided cut solution cannot be optimal");
  if (!is_independent(g, c.set))
    throw CertificateError("recovered set is not independent in the source graph");
  if (g.node_count() <= mis_limit) {
    NodeSet oracle = brute_force_mis(g, mis_limit);
    if (c.set.size() != oracle.size())
      throw CertificateError("recovered set has size " + std::to_string(c.set.size()) +
                             " but the maximum independent set has size " +
                             std::to_string(oracle.size()));
  }
  return c.set;
}

Max2SatReduction reduce_2sat_to_micut(const Max2SatInstance& i) {
  if (i.variable_count < 1)
    throw PreconditionError("reduce_2sat_to_micut needs at least one variable");
  if (has_tautological_clause(i))
    throw PreconditionError(
        "reduce_2sat_to_micut rejects clauses pairing a literal with its own negation; "
        "run preprocess first");
  int n = i.variable_count;
  int m = i.clause_count();
  int total = 2 * n + 3 * m;

  Max2SatReduction red{Graph(1, {}), {}, n};
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) + 5 * static_cast<std::size_t>(m));
  for (int v = 1; v <= n; ++v) edges.emplace_back(red.pos_chief(v), red.neg_chief(v));
  for (int j = 1; j <= m; ++j) {
    const Clause& c = i.clauses[j - 1];
    int base = 2 * n + 3 * (j - 1);
    Gadget gadget{j, red.chief_of(c.first), red.chief_of(c.second),
                  base + 1, base + 2, base + 3};
    edges.emplace_back(gadget.y1, gadget.y2);
    edges.emplace_back(gadget.y2, gadget.y3);
    edges.emplace_back(gadget.y1, gadget.y3);
    edges.emplace_back(gadget.chief1, gadget.y1);
    edges.emplace_back(gadget.chief2, gadget.y2);
    red.gadgets.push_back(gadget);
  }
  red.graph = Graph(total, std::move(edges));
  return red;
}

Assignment recover_assignment(const Max2SatReduction& red, const NodeSet& c) {
  if (!is_maximal_independent(red.graph, c))
    throw PreconditionError("recover_assignment requires a maximal independent set of f(I)");
  Assignment a(static_cast<std::size_t>(red.variable_count), false);
  for (int v = 1; v <= red.variable_count; ++v) a[v - 1] = c.contains(red.pos_chief(v));
  return a;
}

namespace {

// FNV-1a over the canonical serialization; keeps certificates identifiable.
std::string instance_id(const Max2SatInstance& i) {
  std::string bytes = serialize_instance(i);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "m2sat-" + std::string(buf);
}

}  // namespace

ReductionCertificate check_certificate(const Max2SatInstance& i, int trials, std::uint64_t seed,
                                       int sat_limit, int cut_limit, int enumeration_limit) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  ReductionCertificate cert;
  cert.source = instance_id(i);
  cert.n = i.variable_count;
  cert.m = i.clause_count();

  Max2SatReduction red = reduce_2sat_to_micut(i);
  cert.nodes = red.graph.node_count();
  cert.edges = red.graph.edge_count();
  cert.max_deg = max_degree(red.graph);
  cert.counts_hold = cert.nodes == 2 * cert.n + 3 * cert.m && cert.edges == cert.n + 5 * cert.m;
  cert.degree_bound_holds = cert.max_deg <= 4;

  cert.opt_sat = brute_force_opt(i, sat_limit).value;
  cert.opt_cut = exact_micut(red.graph, cut_limit).value;
  int offset = cert.n + 3 * cert.m;
  cert.optimum_identity_holds = cert.opt_cut == offset + cert.opt_sat;
  cert.alpha21_holds = cert.opt_cut <= 21 * cert.opt_sat;
  cert.alpha32_holds = cert.opt_cut <= 32 * cert.opt_sat;

  cert.solution_bound_holds = true;
  cert.beta1_holds = true;
  std::vector<int> degree(red.graph.node_count() + 1);
  for (int v = 1; v <= red.graph.node_count(); ++v) degree[v] = red.graph.degree(v);

  auto check_solution = [&](const NodeSet& set, int cut_value) {
    Assignment t = recover_assignment(red, set);
    int u = evaluate(i, t);
    bool bound_ok = cut_value <= offset + u;
    bool beta = cert.opt_sat - u <= cert.opt_cut - cut_value;
    if ((!bound_ok || !beta) && !cert.counterexample) {
      CertificateCounterexample cx;
      cx.failed_check = !bound_ok ? "solution_bound" : "beta_transfer";
      cx.set = set.members();
      for (bool b : t) cx.assignment.push_back(b ? '1' : '0');
      cx.cut_value = cut_value;
      cx.sat_value = u;
      cert.counterexample = std::move(cx);
    }
    cert.solution_bound_holds = cert.solution_bound_holds && bound_ok;
    cert.beta1_holds = cert.beta1_holds && beta;
    ++cert.checked_sets;
  };

  if (red.graph.node_count() <= std::min(enumeration_limit, 64)) {
    cert.check_mode = "exhaustive";
    for_each_maximal_independent_set(red.graph, [&](std::uint64_t mask) {
      int cut = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        cut += degree[std::countr_zero(rest) + 1];
      check_solution(set_from_mask(mask), cut);
    });
  } else {
    cert.check_mode = "sampled";
    for (int t = 0; t < trials; ++t) {
      IndependentCutSolution sample =
          local_search_micut(red.graph, Rng::derive(seed, static_cast<std::uint64_t>(t)), 1);
      check_solution(sample.set, sample.value);
    }
  }
  return cert;
}

}  // namespace micut
