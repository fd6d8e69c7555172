#pragma once

#include <cstdint>
#include <functional>

#include "micut/graph.hpp"

namespace micut {

// C together with its crossing-edge count; invariants: C is a maximal
// independent set of its graph and value == cut_size.
struct IndependentCutSolution {
  NodeSet set;
  int value = 0;
};

// Visits every maximal independent set exactly once as a node mask (bit v-1
// for node v). Requires node_count <= 64. Branches on the lowest undecided
// node: either it joins the set, or one of its still-free neighbors does.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<void(std::uint64_t)>& visit);

std::uint64_t mask_of(const NodeSet& s);
NodeSet set_from_mask(std::uint64_t mask);

// Exact enumeration over all maximal independent sets; ties broken by the
// lexicographically smallest member list. Throws LimitError over the limit.
IndependentCutSolution exact_micut(const Graph& g, int exhaustive_limit = 30);

// Repeatedly adds the undecided node of maximum residual degree (tie: lowest
// index) and excludes its neighbors. Baseline heuristic, no optimality claim.
IndependentCutSolution greedy_micut(const Graph& g);

// Best-response dynamics under polar parameters from seeded random starts;
// Nash profiles are exactly the maximal-independent-B profiles, so every
// restart yields a feasible solution. Returns the best over `restarts`.
IndependentCutSolution local_search_micut(const Graph& g, std::uint64_t seed, int restarts);

}  // namespace micut
