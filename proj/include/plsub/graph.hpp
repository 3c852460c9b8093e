#ifndef PLSUB_GRAPH_HPP
#define PLSUB_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace plsub {

// Simple undirected graph on dense vertex indices 0..n-1.
// No self-loops, no parallel edges. Treated as immutable once built.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

    int n() const { return static_cast<int>(adj_.size()); }
    long e() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced on `verts`; new indices follow the order of `verts`.
    // Also returns old->new index map (-1 for dropped vertices).
    Graph induced(const std::vector<int>& verts, std::vector<int>* old_to_new = nullptr) const;

    std::vector<std::vector<int>> components() const;

  private:
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    long edge_count_ = 0;
};

// Row-per-vertex adjacency bitsets, for dense set intersections.
class BitMatrix {
  public:
    explicit BitMatrix(const Graph& g);
    int n() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    bool get(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct GraphStats {
    int n = 0;
    long e = 0;
    int min_degree = 0;
    std::vector<int> component_sizes;  // descending
};

GraphStats graph_stats(const Graph& g);

// Disjoint union of k copies of K_{t,t}. Copy c occupies vertices
// [2ct, 2ct+2t); first t are one side, last t the other.
Graph gen_disjoint_biclique(int k, int t);

// Blow-up of a tree: part i is a consecutive index range of size part_sizes[i],
// complete bipartite between tree-adjacent parts, independent noise_prob edges
// on non-tree pairs. Returns the graph and per-vertex part labels.
std::pair<Graph, std::vector<int>> gen_tree_blowup(const std::vector<std::pair<int, int>>& tree_edges,
                                                   const std::vector<int>& part_sizes,
                                                   double noise_prob, std::uint64_t seed);

// Random graph with min degree >= dmin: G(n, p) with p ~ dmin/n, then each
// deficient vertex gets edges to uniformly random non-neighbors.
Graph gen_random_min_degree(int n, int dmin, std::uint64_t seed);

// Edge-list text format: "n m" then m lines "u v" with u < v.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
void write_labels(std::ostream& os, const std::vector<int>& labels);
std::vector<int> read_labels(std::istream& is, int n);

std::uint64_t graph_hash(const Graph& g);

}  // namespace plsub

#endif
