#ifndef PLSUB_REGULARITY_HPP
#define PLSUB_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plsub/graph.hpp"
#include "plsub/structure_fwd.hpp"

namespace plsub {

struct RegularityParams {
    double eps = 0.05;   // regularity tolerance
    double d = 0.25;     // density threshold
    double delta = 0.15; // super-regular degree fraction, pipeline default d - 2*eps
    void validate() const;
};

struct Rational {
    long num = 0;
    long den = 1;
    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

// Exact density e(U,W)/(|U||W|) of a disjoint nonempty pair.
Rational pair_density(const Graph& g, const std::vector<int>& U, const std::vector<int>& W);

enum class RegStatus { RegularCertified, IrregularWitness, NoWitnessFound };

struct RegularityVerdict {
    RegStatus status = RegStatus::NoWitnessFound;
    std::vector<int> witness_u, witness_w;  // populated for IrregularWitness
    double witness_density = 0.0;
    double pair_density_value = 0.0;
};

struct RegularityMode {
    bool exhaustive = false;
    std::uint64_t seed = 0;
    int restarts = 10;
    static RegularityMode Exhaustive() { return {true, 0, 0}; }
    static RegularityMode Heuristic(std::uint64_t seed, int restarts = 10) { return {false, seed, restarts}; }
};

// Exhaustive: certified verdict by subset enumeration (sides <= 12).
// Heuristic: one-sided witness search (degree-deviation sets + restarts);
// every emitted witness is re-verified by direct density computation.
RegularityVerdict regularity_check(const Graph& g, const std::vector<int>& U, const std::vector<int>& W,
                                   double eps, const RegularityMode& mode);

struct PairVerdict {
    double density = 0.0;
    RegStatus status = RegStatus::NoWitnessFound;
};

struct RegularDecomposition {
    std::vector<int> exceptional;             // V_0
    std::vector<std::vector<int>> clusters;   // V_1..V_r (equal sizes)
    std::vector<std::vector<PairVerdict>> pair_table;  // r x r, symmetric
    Graph reduced;                            // edge ij iff regular-and-dense
    int min_degree_reduced = 0;
};

// labels[v] in [0, r) or -1 for V_0.
RegularDecomposition build_decomposition(const Graph& g, const std::vector<int>& labels,
                                         const RegularityParams& params, std::uint64_t seed = 0);

// Neighborhood-similarity clustering into r equal parts plus remainder V_0.
std::vector<int> heuristic_partition(const Graph& g, int r, std::uint64_t seed);

// Natural part-count estimate from similarity groups (for CLI auto mode).
int estimate_part_count(const Graph& g);

// Single-pass cleaning: drop from each cluster the vertices with fewer than
// (d-eps)|V_j| neighbors in some tree-neighbor cluster V_j. Throws
// CleaningOverflow when a cluster loses more than 8(k+1)*eps*|V_i| vertices.
std::vector<std::vector<int>> superregularize(const Graph& g,
                                              const std::vector<std::vector<int>>& clusters,
                                              const SpanningTree& tree,
                                              const RegularityParams& params, int k);

// The per-vertex bound of an (eps,d)-regular partition: edges at each vertex
// outside regular-dense pairs. Returns the max over vertices.
long max_edges_outside_regular_pairs(const Graph& g, const RegularDecomposition& dec,
                                     const RegularityParams& params);

}  // namespace plsub

#endif
