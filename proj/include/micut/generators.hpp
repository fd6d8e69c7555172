#pragma once

#include <cstdint>

#include "micut/graph.hpp"
#include "micut/sat.hpp"

namespace micut {

Graph gen_path(int n);            // n >= 1
Graph gen_cycle(int n);           // n >= 3
Graph gen_star(int n);            // n >= 1, center is node 1
Graph gen_gnp(int n, double p, std::uint64_t seed);
// Random spanning tree plus G(n,p) extras: connected, so no isolated nodes.
Graph gen_connected_gnp(int n, double p, std::uint64_t seed);

// Random valid 3-OCC-MAX-2SAT instance: clauses draw two distinct variables
// with random polarities, uniformly over the pairs that keep every literal
// within three occurrences. No tautologies or duplicate-literal clauses by
// construction. Requires 2 <= m's feasibility; throws if no clause can be
// placed (m too large for n).
Max2SatInstance gen_rand_m2sat(int n, int m, std::uint64_t seed);

}  // namespace micut
