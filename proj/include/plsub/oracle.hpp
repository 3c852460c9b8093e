#ifndef PLSUB_ORACLE_HPP
#define PLSUB_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "plsub/plane.hpp"

namespace plsub {

struct PlanarityResult {
    long value = 0;  // pl(G) when exact, else a lower bound
    std::vector<std::pair<int, int>> witness_edges;
    RotationSystem witness_rotation;  // embedding of the witness subgraph
    bool exact = false;
    long nodes_explored = 0;
};

// Exact planarity number by per-component branch-and-bound over edges in
// descending degree-sum order, pruned by the 3n-6 cap (2n-4 for bipartite
// components) and by planarity of the running subgraph. Intended for
// n <= 10 or e <= 25. If the node budget runs out, returns the best bound
// found with exact = false, or throws BudgetExhausted when strict_budget.
PlanarityResult pl_exact(const Graph& g, long node_budget = 50000000,
                         bool strict_budget = false);

// Maximal planar subgraph by seeded random-order edge insertion; always a
// valid lower-bound witness, never exact by fiat.
PlanarityResult pl_greedy(const Graph& g, std::uint64_t seed = 0);

}  // namespace plsub

#endif
