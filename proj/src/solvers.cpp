#include "micut/solvers.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "micut/errors.hpp"
#include "micut/game.hpp"
#include "micut/rng.hpp"

namespace micut {

namespace {

constexpr int kMaskBits = 64;

struct MisEnumerator {
  std::vector<std::uint64_t> nbr;  // nbr[v-1]
  int n;
  const std::function<void(std::uint64_t)>* visit;

  explicit MisEnumerator(const Graph& g) : n(g.node_count()) {
    nbr.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
      nbr[u - 1] |= std::uint64_t{1} << (v - 1);
      nbr[v - 1] |= std::uint64_t{1} << (u - 1);
    }
  }

  std::uint64_t all() const {
    return n == kMaskBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  void run(const std::function<void(std::uint64_t)>& fn) {
    visit = &fn;
    recurse(0, 0, 0);
  }

  // in_set: chosen nodes; decided: chosen or excluded; uncovered: excluded
  // nodes with no chosen neighbor yet (must gain one later or the branch dies).
  void recurse(std::uint64_t in_set, std::uint64_t decided, std::uint64_t uncovered) {
    std::uint64_t free = all() & ~decided;
    for (std::uint64_t rest = uncovered; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if ((nbr[u] & free) == 0) return;  // u can never be covered
    }
    if (free == 0) {
      if (uncovered == 0) (*visit)(in_set);
      return;
    }
    int v = std::countr_zero(free);
    std::uint64_t candidates = (nbr[v] & free) | (std::uint64_t{1} << v);
    // Each maximal set contains some candidate; branch on the smallest one it
    // contains, excluding the earlier candidates to keep branches disjoint.
    std::uint64_t earlier = 0;
    for (std::uint64_t cands = candidates; cands;) {
      int u = std::countr_zero(cands);
      std::uint64_t u_bit = cands & (~cands + 1);
      cands &= cands - 1;
      std::uint64_t newly_decided = (nbr[u] & free) | u_bit | earlier;
      std::uint64_t new_uncovered = (uncovered | earlier) & ~nbr[u];
      recurse(in_set | u_bit, decided | newly_decided, new_uncovered);
      earlier |= u_bit;
    }
  }
};

// Lexicographic order on ascending member lists: the set owning the smallest
// element of the symmetric difference comes first.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d)) & 1;
}

void check_enumerable(const Graph& g, int exhaustive_limit, const char* who) {
  if (g.node_count() > exhaustive_limit)
    throw LimitError(std::string(who) + ": " + std::to_string(g.node_count()) +
                     " nodes exceed the exhaustive limit " + std::to_string(exhaustive_limit));
  if (g.node_count() > kMaskBits)
    throw LimitError(std::string(who) + ": enumeration supports at most 64 nodes");
}

}  // namespace

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<void(std::uint64_t)>& visit) {
  if (g.node_count() > kMaskBits)
    throw LimitError("for_each_maximal_independent_set supports at most 64 nodes");
  MisEnumerator e(g);
  e.run(visit);
}

std::uint64_t mask_of(const NodeSet& s) {
  std::uint64_t mask = 0;
  for (int v : s.members()) {
    if (v < 1 || v > kMaskBits) throw std::invalid_argument("node outside mask range");
    mask |= std::uint64_t{1} << (v - 1);
  }
  return mask;
}

NodeSet set_from_mask(std::uint64_t mask) {
  std::vector<int> members;
  while (mask) {
    members.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return NodeSet(std::move(members));
}

IndependentCutSolution exact_micut(const Graph& g, int exhaustive_limit) {
  check_enumerable(g, exhaustive_limit, "exact_micut");
  std::vector<int> degree(g.node_count() + 1);
  for (int v = 1; v <= g.node_count(); ++v) degree[v] = g.degree(v);

  int best_value = -1;
  std::uint64_t best_mask = 0;
  for_each_maximal_independent_set(g, [&](std::uint64_t mask) {
    // All edges at an independent set cross it, so the cut is a degree sum.
    int value = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1)
      value += degree[std::countr_zero(rest) + 1];
    if (value > best_value || (value == best_value && lex_less(mask, best_mask))) {
      best_value = value;
      best_mask = mask;
    }
  });
  return {set_from_mask(best_mask), best_value};
}

IndependentCutSolution greedy_micut(const Graph& g) {
  enum class State { Undecided, InSet, Excluded };
  std::vector<State> state(g.node_count() + 1, State::Undecided);
  std::vector<int> chosen;
  for (;;) {
    int pick = 0, pick_degree = -1;
    for (int v = 1; v <= g.node_count(); ++v) {
      if (state[v] != State::Undecided) continue;
      int residual = 0;
      for (int u : g.neighbors(v))
        if (state[u] == State::Undecided) ++residual;
      if (residual > pick_degree) {  // tie keeps the smaller index
        pick = v;
        pick_degree = residual;
      }
    }
    if (pick == 0) break;
    state[pick] = State::InSet;
    chosen.push_back(pick);
    for (int u : g.neighbors(pick))
      if (state[u] == State::Undecided) state[u] = State::Excluded;
  }
  NodeSet set{std::move(chosen)};
  return {set, cut_size(g, set)};
}

IndependentCutSolution local_search_micut(const Graph& g, std::uint64_t seed, int restarts) {
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");
  GameParams polar = polar_params(g, Rational(1));

  IndependentCutSolution best;
  best.value = -1;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(r)));
    ActionProfile start(static_cast<std::size_t>(g.node_count()), Action::A);
    for (int v = 1; v <= g.node_count(); ++v) {
      // Isolated nodes are payoff-indifferent but belong to every maximal
      // independent set; pin them to B so the final B-set is always maximal.
      if (g.degree(v) == 0)
        start[v - 1] = Action::B;
      else
        start[v - 1] = rng.below(2) ? Action::B : Action::A;
    }
    DynamicsTrace trace =
        best_response_dynamics(g, start, polar, Schedule::Random, rng.next());
    NodeSet candidate = b_set(trace.final_profile);
    if (!is_maximal_independent(g, candidate))
      throw CertificateError("polar dynamics ended on a non-maximal B-set");
    int value = cut_size(g, candidate);
    if (value > best.value || (value == best.value && candidate < best.set)) {
      best.set = candidate;
      best.value = value;
    }
  }
  return best;
}

}  // namespace micut
