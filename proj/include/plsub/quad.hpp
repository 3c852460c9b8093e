#ifndef PLSUB_QUAD_HPP
#define PLSUB_QUAD_HPP

#include <string>
#include <vector>

#include "plsub/plane.hpp"
#include "plsub/structure_fwd.hpp"

namespace plsub {

// K_{2,order} attached to a quadrangulation: every member has degree 2 in the
// host and is adjacent exactly to the two anchors; consecutive members share a
// quadrilateral face with the anchors.
struct Bag {
    int x1 = -1;
    int x2 = -1;
    std::vector<int> members;  // in rotation order between the anchors

    int order() const { return static_cast<int>(members.size()); }
};

struct ChunkPlan {
    int cap = 0;  // chunk size ceiling actually used
    // chunks[part][j] = ordered vertex list of the j-th chunk of that part
    std::vector<std::vector<std::vector<int>>> chunks;
};

struct QuadResult {
    PlaneGraph plane;
    std::vector<Bag> bags;
    ChunkPlan chunk_plan;
    long uncovered_count = 0;  // vertices covered by no retained bag
};

// Largest t >= 0 with t^3 <= x (x >= 0).
long icbrt(long x);

// Spanning quadrangulation of the complete-bipartite blow-up of `tree` with
// the given parts (which must partition 0..n-1). Seeds a K_{2,q} between the
// first two vertices of the root part and the first chunk of the root's first
// child, then repeatedly fans whole chunks into quadrilateral faces whose
// opposite corners are a degree-2 pair from the supplying part. Unless
// waived, requires n >= (16r)^3.
QuadResult build_quadrangulation(const std::vector<std::vector<int>>& parts,
                                 const SpanningTree& tree, bool waive_size_check = false);

// Same, but on an explicit blow-up graph; verifies complete bipartite
// adjacency along every tree edge first.
QuadResult build_quadrangulation(const Graph& blowup, const std::vector<std::vector<int>>& parts,
                                 const SpanningTree& tree, bool waive_size_check = false);

// Throws NotABag unless `bag` satisfies every Bag invariant in `host`.
void verify_bag(const PlaneGraph& host, const Bag& bag);

// Empty iff all QuadResult invariants hold: quadrangulation faces,
// e = 2n - 4, max degree <= ceil(n^{1/3}) + 2, disjoint bags, bag orders in
// [n^{1/3}/2, n^{1/3}], uncovered count consistent and <= 9 n^{2/3}.
// All bounds are checked integer-exactly.
std::vector<std::string> quad_invariant_violations(const QuadResult& q);

// Rewrite the rotation slots of bag `bag_index` so its members appear in the
// order given by `new_order` (a permutation of the current member list).
// Planarity and the face-length multiset are unaffected.
void reorder_bag(QuadResult& q, int bag_index, const std::vector<int>& new_order);

struct InsertionOptions {
    // When set, replaces the n^{1/3}/(32k^2)-neighbour / n^{1/3}/(128k^2)-
    // capacity thresholds (which vanish at small n) with the direct
    // requirement that every assigned vertex keeps >= 2|L_i| member
    // neighbours and |L_i| <= max(1, order/4).
    bool relaxed = false;
};

struct InsertionPlan {
    std::vector<int> leftovers;
    std::vector<std::vector<int>> assignment;  // aligned with the bag list given to plan_insertions
    int good_threshold = 0;                    // ceil(n^{1/3} / (32 k^2))
    int capacity = 0;                          // floor(n^{1/3} / (128 k^2))
    bool relaxed = false;
};

// Sequential greedy assignment of leftover vertices L to bags, per-bag up to
// capacity, requiring good_threshold many host-neighbours among the bag's
// members (or the relaxed criterion). Throws UnassignableVertex if any
// leftover remains unplaced. n_param sets the thresholds and may exceed the
// actual host order when exercising the asymptotic regime.
InsertionPlan plan_insertions(const std::vector<Bag>& bags, const std::vector<int>& L,
                              const Graph& host, int k, long n_param,
                              const InsertionOptions& opts = {});

// Insert every assigned leftover: reorder its bag so the j-th assigned vertex
// is host-adjacent to members 2j-1 and 2j, then join it to exactly that
// member pair inside their shared face. plan.assignment indexes the
// concatenation of qs[0].bags, qs[1].bags, ... Used bag prefixes are retired;
// each inserted vertex forms a new bag of order 1.
void execute_insertions(std::vector<QuadResult>& qs, const InsertionPlan& plan,
                        const Graph& host);

// The same quadrangulation with every vertex v renamed image[v]; the result
// lives on new_n vertices (unnamed ones become isolated).
QuadResult remap_quad(const QuadResult& q, const std::vector<int>& image, int new_n);

}  // namespace plsub

#endif
