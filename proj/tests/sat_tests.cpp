#include <doctest.h>

#include <algorithm>

#include "micut/errors.hpp"
#include "micut/generators.hpp"
#include "micut/rng.hpp"
#include "micut/sat.hpp"

using namespace micut;

TEST_CASE("parse_instance reads the m2sat format") {
  Max2SatInstance i = parse_instance("p m2sat 2 1\n1 2\n");
  CHECK(i.variable_count == 2);
  REQUIRE(i.clause_count() == 1);
  CHECK(i.clauses[0] == Clause{1, 2});
}

TEST_CASE("tautological clauses are accepted at parse time") {
  Max2SatInstance i = parse_instance("p m2sat 1 1\n1 -1\n");
  CHECK(has_tautological_clause(i));
}

TEST_CASE("parse_instance enforces the occurrence bound") {
  // four copies of (x1 v x1): eight occurrences of the literal x1
  CHECK_THROWS_WITH_AS(parse_instance("p m2sat 1 4\n1 1\n1 1\n1 1\n1 1\n"),
                       doctest::Contains("x1 occurs 8"), ParseError);
}

TEST_CASE("parse_instance rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("p m2sat 2 1\n1 2 2\n"), ParseError);  // three literals
  CHECK_THROWS_AS(parse_instance("p m2sat 2 1\n1\n"), ParseError);      // one literal
  CHECK_THROWS_AS(parse_instance("p m2sat 2 1\n1 3\n"), ParseError);    // out of range
  CHECK_THROWS_AS(parse_instance("p m2sat 2 1\n0 2\n"), ParseError);    // zero literal
  CHECK_THROWS_AS(parse_instance("p m2sat 2 2\n1 2\n"), ParseError);    // missing clause
}

TEST_CASE("preprocess removes a lone tautology") {
  PreprocessReport r = preprocess(parse_instance("p m2sat 1 1\n1 -1\n"));
  CHECK(r.removed_tautologies == 1);
  CHECK(r.residual.variable_count == 0);
  CHECK(r.residual.clause_count() == 0);
  CHECK(r.guaranteed_true == 1);  // a tautology is true under every assignment
}

TEST_CASE("preprocess cascades polarity forcing") {
  PreprocessReport r = preprocess(parse_instance("p m2sat 2 1\n1 2\n"));
  CHECK(r.forced.at(1) == true);  // negation of x1 never occurs
  CHECK(r.forced.count(2) == 1);  // unconstrained after the cascade
  CHECK(r.residual.clause_count() == 0);
  CHECK(r.residual.variable_count == 0);
  CHECK(r.guaranteed_true == 1);
}

TEST_CASE("preprocess keeps a both-polarity instance untouched") {
  Max2SatInstance i = parse_instance("p m2sat 2 4\n1 2\n-1 2\n1 -2\n-1 -2\n");
  PreprocessReport r = preprocess(i);
  CHECK(r.removed_tautologies == 0);
  CHECK(r.forced.empty());
  CHECK(r.residual.variable_count == 2);
  CHECK(r.residual.clauses == i.clauses);
}

TEST_CASE("evaluate counts satisfied clauses") {
  Max2SatInstance one = parse_instance("p m2sat 2 1\n1 2\n");
  CHECK(evaluate(one, {true, false}) == 1);
  CHECK(evaluate(one, {false, false}) == 0);
  Max2SatInstance two = parse_instance("p m2sat 2 2\n1 2\n-1 -2\n");
  CHECK(evaluate(two, {true, false}) == 2);
}

TEST_CASE("brute_force_opt on small canonical instances") {
  CHECK(brute_force_opt(parse_instance("p m2sat 2 1\n1 2\n")).value == 1);
  // all four polarity combinations over two variables: any assignment
  // satisfies exactly three (hand enumeration of the 4 assignments)
  Max2SatInstance four = parse_instance("p m2sat 2 4\n1 2\n-1 2\n1 -2\n-1 -2\n");
  int best = 0;
  for (int k = 0; k < 4; ++k) {
    Assignment a{(k & 2) != 0, (k & 1) != 0};
    best = std::max(best, evaluate(four, a));
  }
  CHECK(best == 3);
  CHECK(brute_force_opt(four).value == 3);
  CHECK(brute_force_opt(Max2SatInstance{3, {}}).value == 0);
}

TEST_CASE("brute_force_opt refuses beyond the exhaustive limit") {
  Max2SatInstance big{25, {}};
  CHECK_THROWS_WITH_AS(brute_force_opt(big), doctest::Contains("20"), LimitError);
  CHECK_NOTHROW(brute_force_opt(big, 25));
}

TEST_CASE("brute_force_opt tie-break is the lex-smallest assignment") {
  // (x1 v x2): OPT=1 attained by 01, 10, 11; lex order false<true picks 01.
  OptResult r = brute_force_opt(parse_instance("p m2sat 2 1\n1 2\n"));
  CHECK(r.assignment == Assignment{false, true});
}

TEST_CASE("majority heuristic follows occurrence counts") {
  Max2SatInstance i = parse_instance("p m2sat 2 3\n1 2\n1 -2\n-1 -2\n");
  Assignment a = majority_heuristic(i);
  CHECK(a == Assignment{true, false});  // x1: 2 vs 1 -> true; x2: 1 vs 2 -> false
  CHECK(evaluate(i, a) == 3);
  CHECK(evaluate(i, a) >= i.variable_count / 2);
}

TEST_CASE("majority heuristic handles all-tied instances and empty residuals") {
  Max2SatInstance tied = parse_instance("p m2sat 2 2\n1 2\n-1 -2\n");
  Assignment a = majority_heuristic(tied);
  CHECK(a == Assignment{true, true});
  CHECK(evaluate(tied, a) == 1);
  CHECK(majority_heuristic(Max2SatInstance{0, {}}).empty());
}

TEST_CASE("majority heuristic rejects non-residual instances") {
  CHECK_THROWS_WITH_AS(majority_heuristic(parse_instance("p m2sat 2 1\n1 2\n")),
                       doctest::Contains("preprocess"), PreconditionError);
}

TEST_CASE("opt value is consistent with its assignment") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(2, 8);
    int m = rng.range(1, 3 * n > 12 ? 12 : 3 * n);
    Max2SatInstance i = gen_rand_m2sat(n, m, rng.next());
    OptResult r = brute_force_opt(i);
    CHECK(evaluate(i, r.assignment) == r.value);
  }
}

TEST_CASE("majority bound holds on random residual instances") {
  Rng rng(5);
  int checked = 0;
  while (checked < 50) {
    int n = rng.range(2, 9);
    int m = rng.range(2, 3 * n > 14 ? 14 : 3 * n);
    PreprocessReport r = preprocess(gen_rand_m2sat(n, m, rng.next()));
    if (r.residual.variable_count == 0) continue;
    Assignment a = majority_heuristic(r.residual);
    CHECK(evaluate(r.residual, a) >= r.residual.variable_count / 2);
    ++checked;
  }
}

TEST_CASE("preprocess is idempotent") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.range(2, 8);
    int m = rng.range(1, 10);
    if (m > 3 * n) m = 3 * n;
    PreprocessReport first = preprocess(gen_rand_m2sat(n, m, rng.next()));
    PreprocessReport second = preprocess(first.residual);
    CHECK(second.removed_tautologies == 0);
    CHECK(second.forced.empty());
    CHECK(second.residual.variable_count == first.residual.variable_count);
    CHECK(second.residual.clauses == first.residual.clauses);
  }
}

TEST_CASE("preprocess conserves the objective") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.range(2, 7);
    int m = rng.range(1, 9);
    if (m > 3 * n) m = 3 * n;
    Max2SatInstance original = gen_rand_m2sat(n, m, rng.next());
    PreprocessReport r = preprocess(original);
    // any assignment of the residual, extended by the forced values
    for (int k = 0; k < 8; ++k) {
      Assignment res(static_cast<std::size_t>(r.residual.variable_count));
      for (int v = 0; v < r.residual.variable_count; ++v) res[v] = rng.below(2);
      Assignment full = extend_assignment(r, res);
      CHECK(evaluate(original, full) == evaluate(r.residual, res) + r.guaranteed_true);
    }
  }
}

TEST_CASE("conservation also counts removed tautologies") {
  Max2SatInstance i = parse_instance("p m2sat 2 2\n1 -1\n1 2\n");
  PreprocessReport r = preprocess(i);
  CHECK(r.removed_tautologies == 1);
  CHECK(r.guaranteed_true == 2);  // the tautology plus the clause forcing satisfied
  CHECK(r.residual.variable_count == 0);
  CHECK(evaluate(i, extend_assignment(r, {})) == r.guaranteed_true);
  // x2's forcing is vacuous (it never occurs), so either value conserves too
  CHECK(evaluate(i, {true, false}) == r.guaranteed_true);
}

TEST_CASE("residual invariants hold after preprocessing") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.range(2, 8);
    int m = rng.range(1, 12);
    if (m > 3 * n) m = 3 * n;
    PreprocessReport r = preprocess(gen_rand_m2sat(n, m, rng.next()));
    CHECK(satisfies_residual_invariants(r.residual));
  }
}

TEST_CASE("instance serialization round-trips") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.range(2, 9);
    Max2SatInstance i = gen_rand_m2sat(n, rng.range(1, std::min(8, 3 * n)), rng.next());
    Max2SatInstance back = parse_instance(serialize_instance(i));
    CHECK(back.variable_count == i.variable_count);
    CHECK(back.clauses == i.clauses);
  }
}
