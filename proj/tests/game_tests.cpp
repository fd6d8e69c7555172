#include <doctest.h>

#include <algorithm>

#include "micut/errors.hpp"
#include "micut/game.hpp"
#include "micut/generators.hpp"
#include "micut/rng.hpp"
#include "micut/solvers.hpp"

using namespace micut;

namespace {

GameParams spec_params() {  // (pi_AA, pi_AB, pi_BA, pi_BB) = (0, 2, 3, 1)
  return GameParams::from_matrix(Rational(0), Rational(2), Rational(3), Rational(1));
}

ActionProfile profile_of(const Graph& g, std::uint64_t bits) {  // bit v-1 set -> B
  ActionProfile s(static_cast<std::size_t>(g.node_count()), Action::A);
  for (int v = 1; v <= g.node_count(); ++v)
    if ((bits >> (v - 1)) & 1) s[v - 1] = Action::B;
  return s;
}

GameParams random_params(Rng& rng) {
  Rational pi_AA(rng.range(-2, 2), rng.range(1, 3));
  Rational pi_BB(rng.range(-2, 2), rng.range(1, 3));
  Rational pi_BA = pi_AA + Rational(rng.range(1, 4), rng.range(1, 3));
  Rational pi_AB = pi_BB + Rational(rng.range(1, 4), rng.range(1, 3));
  return GameParams::from_matrix(pi_AA, pi_AB, pi_BA, pi_BB);
}

}  // namespace

TEST_CASE("relative payoffs derive from the matrix") {
  GameParams p = spec_params();
  CHECK(p.pi_A() == Rational(1));  // pi_AB - pi_BB = 2 - 1
  CHECK(p.pi_B() == Rational(3));  // pi_BA - pi_AA = 3 - 0
  CHECK_THROWS_AS(GameParams::from_matrix(Rational(1), Rational(2), Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("player_payoff sums matrix entries over neighbors") {
  Graph path = gen_path(3);
  ActionProfile s = profile_from_string("BAB");
  GameParams p = spec_params();
  CHECK(player_payoff(path, s, 2, p) == Rational(4));  // pi_AB + pi_AB
  CHECK(player_payoff(path, s, 1, p) == Rational(3));  // pi_BA
  Graph lonely(1, {});
  CHECK(player_payoff(lonely, ActionProfile{Action::A}, 1, p) == Rational(0));
}

TEST_CASE("frustration counts weighted same-action edges") {
  Graph triangle = gen_cycle(3);
  GameParams p = GameParams::from_relative(Rational(2), Rational(1));
  CHECK(frustration(triangle, profile_from_string("AAA"), p) == Rational(3));  // pi_B * 3
  CHECK(frustration(triangle, profile_from_string("BBB"), p) == Rational(6));  // pi_A * 3
  Graph path = gen_path(3);
  CHECK(frustration(path, profile_from_string("BAB"), spec_params()) == Rational(0));
}

TEST_CASE("is_nash on canonical profiles") {
  Graph path = gen_path(3);
  GameParams p = spec_params();
  CHECK(is_nash(path, profile_from_string("BAB"), p));
  CHECK_FALSE(is_nash(path, profile_from_string("AAA"), p));
  Graph edge(2, {{1, 2}});
  CHECK(is_nash(edge, profile_from_string("AB"), p));  // the matrix's pure equilibrium
  CHECK(is_nash(edge, profile_from_string("BA"), p));
}

TEST_CASE("is_local_min_frustration on canonical profiles") {
  Graph path = gen_path(3);
  GameParams p = spec_params();
  CHECK(is_local_min_frustration(path, profile_from_string("BAB"), p));
  CHECK_FALSE(is_local_min_frustration(path, profile_from_string("AAA"), p));
  Graph lonely(1, {});
  CHECK(is_local_min_frustration(lonely, profile_from_string("A"), p));
  CHECK(is_local_min_frustration(lonely, profile_from_string("B"), p));
}

TEST_CASE("flip identity: frustration drop equals deviator gain") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.range(1, 10);
    Graph g = gen_gnp(n, 0.45, rng.next());
    GameParams p = random_params(rng);
    ActionProfile s = profile_of(g, rng.next());
    int node = rng.range(1, n);
    Rational before = frustration(g, s, p);
    ActionProfile flipped = s;
    flipped[node - 1] = flipped[node - 1] == Action::A ? Action::B : Action::A;
    Rational after = frustration(g, flipped, p);
    CHECK(before - after == payoff_gain_from_flip(g, s, node, p));
  }
}

TEST_CASE("nash iff local frustration minimum, exhaustively") {
  Rng rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    int n = rng.range(1, 8);
    Graph g = gen_gnp(n, 0.5, rng.next());
    GameParams p = random_params(rng);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ActionProfile s = profile_of(g, bits);
      CHECK(is_nash(g, s, p) == is_local_min_frustration(g, s, p));
    }
  }
}

TEST_CASE("polar_params picks pi_A = (m+1) * pi_B") {
  Graph seven = gen_gnp(6, 0.5, 99);  // whatever edge count it has
  GameParams p = polar_params(seven, Rational(1));
  CHECK(p.pi_A() == Rational(seven.edge_count() + 1));
  Graph edgeless(3, {});
  CHECK(polar_params(edgeless, Rational(1)).pi_A() == Rational(1));
  Graph single(2, {{1, 2}});
  CHECK(polar_params(single, Rational(2)).pi_A() == Rational(4));
  // any profile with a B-B edge is costlier than any profile without one
  Graph c5 = gen_cycle(5);
  GameParams polar = polar_params(c5, Rational(1));
  CHECK(frustration(c5, profile_from_string("BBAAA"), polar) >
        frustration(c5, profile_from_string("AAAAA"), polar));
}

TEST_CASE("is_polar_equilibrium is the maximal-independence test on B") {
  Graph path = gen_path(3);
  CHECK(is_polar_equilibrium(path, profile_from_string("BAB")));
  CHECK_FALSE(is_polar_equilibrium(path, profile_from_string("BBA")));
  CHECK_FALSE(is_polar_equilibrium(path, profile_from_string("BAA")));  // node 3 uncovered
}

TEST_CASE("polar equivalence: nash iff maximal independent B, exhaustively") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.range(2, 9);
    Graph g = gen_connected_gnp(n, 0.35, rng.next());
    GameParams polar = polar_params(g, Rational(1));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ActionProfile s = profile_of(g, bits);
      CHECK(is_nash(g, s, polar) == is_polar_equilibrium(g, s));
    }
  }
}

TEST_CASE("an isolated node breaks the polar equivalence one way only") {
  // An isolated A player is payoff-indifferent,
  // so the profile is Nash while its B-set is not maximal.
  Graph lonely(1, {});
  GameParams polar = polar_params(lonely, Rational(1));
  CHECK(is_nash(lonely, profile_from_string("A"), polar));
  CHECK_FALSE(is_polar_equilibrium(lonely, profile_from_string("A")));
  // polar equilibrium still implies Nash on any graph
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.range(1, 8);
    Graph g = gen_gnp(n, 0.3, rng.next());
    GameParams p = polar_params(g, Rational(1));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ActionProfile s = profile_of(g, bits);
      if (is_polar_equilibrium(g, s)) CHECK(is_nash(g, s, p));
    }
  }
}

TEST_CASE("dynamics: already-Nash start takes zero steps") {
  Graph path = gen_path(3);
  DynamicsTrace t = best_response_dynamics(path, profile_from_string("BAB"), spec_params(),
                                           Schedule::RoundRobin, 0);
  CHECK(t.step_count == 0);
  CHECK(profile_to_string(t.final_profile) == "BAB");
}

TEST_CASE("dynamics: all-A on the path reaches zero frustration quickly") {
  Graph path = gen_path(3);
  DynamicsTrace t = best_response_dynamics(path, profile_from_string("AAA"), spec_params(),
                                           Schedule::RoundRobin, 0);
  CHECK(t.step_count <= 3);
  CHECK(is_nash(path, t.final_profile, spec_params()));
  CHECK(frustration(path, t.final_profile, spec_params()) == Rational(0));
}

TEST_CASE("dynamics terminate at Nash with strictly decreasing frustration") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(1, 12);
    Graph g = gen_gnp(n, 0.4, rng.next());
    GameParams p = random_params(rng);
    ActionProfile start = profile_of(g, rng.next());
    Schedule sched = trial % 2 ? Schedule::RoundRobin : Schedule::Random;
    DynamicsTrace t = best_response_dynamics(g, start, p, sched, rng.next());
    CHECK(is_nash(g, t.final_profile, p));
    CHECK(t.step_count == static_cast<int>(t.frustration_sequence.size()));
    Rational prev = frustration(g, start, p);
    for (const Rational& phi : t.frustration_sequence) {
      CHECK(phi < prev);
      prev = phi;
    }
  }
}

TEST_CASE("integer-parameter dynamics step count is at most (m+1)^2") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.range(2, 10);
    Graph g = gen_gnp(n, 0.5, rng.next());
    GameParams p = GameParams::from_relative(Rational(rng.range(1, 5)), Rational(rng.range(1, 5)));
    DynamicsTrace t = best_response_dynamics(g, profile_of(g, rng.next()), p,
                                             Schedule::Random, rng.next());
    int bound = (g.edge_count() + 1) * (g.edge_count() + 1);
    CHECK(t.step_count <= bound);
  }
}

TEST_CASE("cut correspondence for independent B-sets") {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.range(1, 10);
    Graph g = gen_gnp(n, 0.4, rng.next());
    GameParams p = random_params(rng);
    // greedily thin a random subset into an independent B-set
    std::vector<int> members;
    NodeSet b;
    for (int v = 1; v <= n; ++v) {
      if (!rng.below(2)) continue;
      bool clash = false;
      for (int u : g.neighbors(v))
        if (std::find(members.begin(), members.end(), u) != members.end()) clash = true;
      if (!clash) members.push_back(v);
    }
    b = NodeSet(members);
    ActionProfile s(static_cast<std::size_t>(n), Action::A);
    for (int v : b.members()) s[v - 1] = Action::B;
    Rational expected = p.pi_B() * Rational(g.edge_count() - cut_size(g, b));
    CHECK(frustration(g, s, p) == expected);
  }
}

TEST_CASE("profile string round-trip") {
  CHECK(profile_to_string(profile_from_string("ABBA")) == "ABBA");
  CHECK_THROWS_AS(profile_from_string("AXB"), std::invalid_argument);
  CHECK(b_set(profile_from_string("ABBA")) == NodeSet({2, 3}));
}
