#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace micut {

// A literal is a nonzero int: +k for x_k, -k for its negation.
struct Clause {
  int first = 0;
  int second = 0;
  friend bool operator==(const Clause&, const Clause&) = default;
};

// 3-OCC-MAX-2SAT instance: two literals per clause, each literal in at most
// three clauses (a clause like (x ∨ x) spends two of x's occurrences).
// variable_count may be 0 for the empty instance left by preprocessing.
struct Max2SatInstance {
  int variable_count = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  // Validates literal ranges and the occurrence bound; throws std::invalid_argument.
  static Max2SatInstance make(int variable_count, std::vector<Clause> clauses);
};

// values[k-1] is the value of x_k.
using Assignment = std::vector<bool>;

struct PreprocessReport {
  int removed_tautologies = 0;
  std::map<int, bool> forced;       // original variable -> forced value
  int guaranteed_true = 0;          // removed clauses; all true under any extension of `forced`
  Max2SatInstance residual;
  std::vector<int> residual_vars;   // residual variable i (1-based) -> original variable
};

// m2sat format: "p m2sat <n> <m>" header, then m lines of two nonzero
// integers (-k is the negation of x_k), comment lines starting with 'c'.
Max2SatInstance parse_instance(std::istream& in);
Max2SatInstance parse_instance(std::string_view text);
std::string serialize_instance(const Max2SatInstance& i);

int occurrences(const Max2SatInstance& i, int literal);
bool has_tautological_clause(const Max2SatInstance& i);
// True when every variable occurs in at least one clause in each polarity
// and no clause pairs a literal with its own negation.
bool satisfies_residual_invariants(const Max2SatInstance& i);

// Removes tautological clauses, then iteratively fixes any variable missing a
// polarity (true when its negation never occurs, false when the positive
// literal never occurs) and removes the clauses that fix satisfies, until the
// residual invariants hold. Surviving variables are renumbered 1..n'.
PreprocessReport preprocess(const Max2SatInstance& i);

// Lifts an assignment of the residual back to the original variables.
Assignment extend_assignment(const PreprocessReport& report, const Assignment& residual_assignment);

// Number of clauses with at least one true literal.
int evaluate(const Max2SatInstance& i, const Assignment& a);

struct OptResult {
  Assignment assignment;
  int value = 0;
};

// Exhausts all 2^n assignments; ties broken by the lexicographically smallest
// assignment (false < true, variable 1 most significant).
OptResult brute_force_opt(const Max2SatInstance& i, int exhaustive_limit = 20);

// Sets each variable to its majority-occurrence polarity (ties -> true).
// Requires the residual invariants; the result satisfies >= floor(n/2) clauses.
Assignment majority_heuristic(const Max2SatInstance& i);

}  // namespace micut
