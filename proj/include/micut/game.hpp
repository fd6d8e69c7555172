#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "micut/graph.hpp"
#include "micut/rational.hpp"

namespace micut {

enum class Action : std::uint8_t { A, B };

// actions[v-1] is node v's action.
using ActionProfile = std::vector<Action>;

// Payoff matrix of the pairwise anti-coordination game. The relative payoffs
// pi_A, pi_B are the unilateral-deviation losses at the (A,B) equilibrium.
class GameParams {
 public:
  static GameParams from_matrix(Rational pi_AA, Rational pi_AB, Rational pi_BA, Rational pi_BB);
  // Matrix (0, pi_a, pi_b, 0) realizing the given relative payoffs directly.
  static GameParams from_relative(Rational pi_a, Rational pi_b);

  Rational pi_AA() const { return pi_AA_; }
  Rational pi_AB() const { return pi_AB_; }
  Rational pi_BA() const { return pi_BA_; }
  Rational pi_BB() const { return pi_BB_; }
  Rational pi_A() const { return pi_AB_ - pi_BB_; }
  Rational pi_B() const { return pi_BA_ - pi_AA_; }

  // Entry for a player choosing `mine` against a neighbor choosing `theirs`.
  Rational entry(Action mine, Action theirs) const;

 private:
  GameParams(Rational aa, Rational ab, Rational ba, Rational bb)
      : pi_AA_(aa), pi_AB_(ab), pi_BA_(ba), pi_BB_(bb) {}
  Rational pi_AA_, pi_AB_, pi_BA_, pi_BB_;
};

std::string profile_to_string(const ActionProfile& s);
ActionProfile profile_from_string(std::string_view text);
// The set of B players (the game-side counterpart of the cut set C).
NodeSet b_set(const ActionProfile& s);

Rational player_payoff(const Graph& g, const ActionProfile& s, int node, const GameParams& p);
// Deviator's payoff after flipping `node`, minus payoff before.
Rational payoff_gain_from_flip(const Graph& g, const ActionProfile& s, int node,
                               const GameParams& p);

// phi = pi_A * n_BB + pi_B * n_AA; its negation is a potential of the game.
Rational frustration(const Graph& g, const ActionProfile& s, const GameParams& p);

bool is_nash(const Graph& g, const ActionProfile& s, const GameParams& p);
bool is_local_min_frustration(const Graph& g, const ActionProfile& s, const GameParams& p);

// Parameter-free equilibrium test for the polar regime pi_A >> pi_B: the B
// players form a maximal independent set.
bool is_polar_equilibrium(const Graph& g, const ActionProfile& s);

// Params with pi_A = (m+1) * pi_b, the weakest uniform threshold making one
// B-B edge costlier than every A-A edge combined.
GameParams polar_params(const Graph& g, Rational pi_b);

enum class Schedule { RoundRobin, Random };
Schedule schedule_from_string(std::string_view name);

struct DynamicsTrace {
  int step_count = 0;
  std::vector<Rational> frustration_sequence;  // value after each accepted move
  ActionProfile final_profile;
};

// Asynchronous best-response dynamics: repeatedly flips a strictly improving
// player (order per schedule) until none exists. Every accepted move strictly
// decreases frustration, so termination is guaranteed.
DynamicsTrace best_response_dynamics(const Graph& g, const ActionProfile& start,
                                     const GameParams& p, Schedule schedule, std::uint64_t seed);

}  // namespace micut
