#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "micut/graph.hpp"
#include "micut/sat.hpp"
#include "micut/solvers.hpp"

namespace micut {

// Per-clause gadget of the 2SAT construction: an accessory triangle
// y1-y2-y3 plus pendant edges chief1-y1 and chief2-y2 (five edges).
struct Gadget {
  int clause_index = 0;  // 1-based
  int chief1 = 0, chief2 = 0;
  int y1 = 0, y2 = 0, y3 = 0;
};

// Maximum independent set -> maximum independent cut (dense construction):
// keeps the original edges, appends an n^2-clique, and joins every original
// node to every appended node. Requires a non-complete graph on >= 2 nodes.
Graph reduce_mis_to_micut(const Graph& g);

// Extracts the maximum independent set of g from an optimal solution of the
// constructed graph. Verifies the set lies in 1..n and is independent in g;
// within `mis_limit` nodes, also verifies maximum cardinality by brute force.
NodeSet recover_mis(const Graph& g, const IndependentCutSolution& c, int mis_limit = 30);

// Maximum-cardinality independent set oracle (enumeration, lexicographic ties).
NodeSet brute_force_mis(const Graph& g, int exhaustive_limit = 30);

struct Max2SatReduction {
  Graph graph;
  std::vector<Gadget> gadgets;
  int variable_count = 0;

  int pos_chief(int var) const { return 2 * var - 1; }  // node for literal x_var
  int neg_chief(int var) const { return 2 * var; }      // node for its negation
  int chief_of(int literal) const {
    return literal > 0 ? pos_chief(literal) : neg_chief(-literal);
  }
};

// 3-OCC-MAX-2SAT -> 4-sparse maximum independent cut: chief pair per variable
// (nodes 2i-1, 2i with an edge), one gadget per clause. Exactly 2n+3m nodes
// and n+5m edges, max degree 4. Rejects tautological clauses.
Max2SatReduction reduce_2sat_to_micut(const Max2SatInstance& i);

// T = g(C): x_i true iff the positive chief node is in C. Requires C maximal
// independent in the constructed graph.
Assignment recover_assignment(const Max2SatReduction& red, const NodeSet& c);

struct CertificateCounterexample {
  std::string failed_check;
  std::vector<int> set;
  std::string assignment;
  int cut_value = 0;
  int sat_value = 0;
};

struct ReductionCertificate {
  std::string source;
  int n = 0, m = 0;
  int nodes = 0, edges = 0, max_deg = 0;
  int opt_sat = 0, opt_cut = 0;
  bool counts_hold = false;
  bool degree_bound_holds = false;
  bool solution_bound_holds = false;    // v(f(I),C) <= n + 3m + u(I,g(C)) for every checked C
  bool optimum_identity_holds = false;  // OPT(f(I)) == n + 3m + OPT(I)
  bool beta1_holds = false;             // OPT(I) - u <= OPT(f(I)) - v for every checked C
  bool alpha21_holds = false;
  bool alpha32_holds = false;  // checked too; only the tighter bound is reported
  std::string check_mode;      // "exhaustive" or "sampled"
  long long checked_sets = 0;
  std::optional<CertificateCounterexample> counterexample;

  bool all_hold() const {
    return counts_hold && degree_bound_holds && solution_bound_holds && optimum_identity_holds &&
           beta1_holds && alpha21_holds;
  }
};

// Builds f(I), computes both optima by brute force, and verifies the counting
// formulas, the degree bound, the per-solution bound v <= n + 3m + u over
// maximal independent sets (full enumeration when the graph fits
// `enumeration_limit`, otherwise `trials` seeded local-search samples), the
// exact optimum identity, the beta = 1 transfer, and the alpha bounds. A
// false flag plus counterexample indicates a defect, never an expected
// outcome.
ReductionCertificate check_certificate(const Max2SatInstance& i, int trials, std::uint64_t seed,
                                       int sat_limit = 20, int cut_limit = 64,
                                       int enumeration_limit = 64);

}  // namespace micut
