#ifndef PLSUB_EMBED_HPP
#define PLSUB_EMBED_HPP

#include <cstdint>
#include <vector>

#include "plsub/plane.hpp"

namespace plsub {

using Ordering = std::vector<int>;  // permutation of 0..n-1

struct EmbeddingMap {
    std::vector<int> map;  // guest vertex -> host vertex
    bool part_respecting = true;
};

// a(H, order): max over i of |N(N(x_i) ∩ {x_{i+1}..x_n}) ∩ {x_1..x_i}|.
// The literal formula counts x_i itself whenever it has a later neighbour;
// count_self = false switches to the variant that excludes it.
int arrangeability_at(const Graph& h, const Ordering& order, bool count_self = true);

// Smallest-last (degeneracy) ordering, lowest index first on ties.
Ordering ordering_heuristic(const Graph& h);

struct EmbedOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
    // Delta(H) <= sqrt(n)/log n is enforced by default; the bound is
    // asymptotic and fails for honest inputs at small n, so callers may
    // waive it (recording the waiver downstream).
    bool waive_degree_bound = false;
};

// Randomized greedy embedding of H into ghost with part i mapped onto
// cluster i (equal sizes required): vertices are placed in `order` (empty =
// descending H-degree), each into a random host vertex of its cluster
// adjacent to all previously placed neighbours' images; one single-step
// backtrack per stall, then restart. The returned map is re-verified
// edge-by-edge before being returned. Throws EmbedFailed after the budget.
EmbeddingMap greedy_blowup_embed(const Graph& h, const std::vector<std::vector<int>>& hparts,
                                 const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                                 const Ordering& order = {}, const EmbedOptions& opts = {});

// Verifies injectivity, adjacency preservation, and part respect; throws
// InputError describing the first violation.
void verify_embedding(const Graph& h, const std::vector<std::vector<int>>& hparts,
                      const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                      const EmbeddingMap& phi);

// Stacked-octahedra triangulation on s vertices (s >= 6, s % 3 == 0):
// s/3 nested triangles, consecutive ones joined as an octahedron. Returns
// the plane triangulation and a balanced proper 3-coloring.
std::pair<PlaneGraph, std::vector<int>> gen_tripartite_triangulation(int s);

// Greedy candidate-set embedding of the 3-partite triangulation t3 with
// color class c going into clusters[c] (class sizes may be smaller than the
// clusters). Verified before return; throws EmbedFailed on budget exhaustion.
EmbeddingMap embed_tripartite(const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                              const PlaneGraph& t3, const std::vector<int>& coloring,
                              const EmbedOptions& opts = {});

}  // namespace plsub

#endif
