#ifndef PLSUB_STRUCTURE_HPP
#define PLSUB_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plsub/graph.hpp"
#include "plsub/regularity.hpp"
#include "plsub/structure_fwd.hpp"

namespace plsub {

// The unique k with k <= 1/(2*gamma) < k+1, for gamma in (0, 1/2).
int compute_k(double gamma);

struct PipelineConfig {
    double gamma = 0.3;
    int k = 1;
    double beta = 0.0;  // gamma - 1/(2(k+1))
    int s = 12;         // triangulation order for the small-component case
    RegularityParams params;
    std::uint64_t seed = 0;
    bool waive_size_check = false;
    int max_recursion_depth = 3;

    static PipelineConfig from_gamma(double gamma, const RegularityParams& params = {},
                                     std::uint64_t seed = 0);
    void validate() const;
};

struct CaseSplit {
    bool small_component = false;       // the "Case 1" branch
    int component_id = -1;              // index into components
    std::vector<int> triangle;          // 3 reduced-graph vertices, Case 1 only
    std::vector<std::vector<int>> components;  // reduced-graph components (sorted)
};

// Case 1 iff some component of R has fewer than 2*deltaR vertices; such a
// component must contain a triangle (min degree exceeds half its order).
CaseSplit case_split(const Graph& reduced, int deltaR);

// Score-decreasing local search: while some vertex has tree-degree > 8k,
// detach it from its smallest split component and reattach that component
// to a low-degree vertex. Every swap strictly decreases sum(deg^2).
struct SpanningTreeLog {
    std::vector<long> scores;  // score after each swap, starting with the BFS tree
    int swaps = 0;
};

SpanningTree bounded_spanning_tree(const Graph& component, int k, SpanningTreeLog* log = nullptr);

}  // namespace plsub

#endif
