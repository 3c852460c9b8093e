#ifndef PLSUB_STRUCTURE_FWD_HPP
#define PLSUB_STRUCTURE_FWD_HPP

#include <utility>
#include <vector>

namespace plsub {

// Spanning tree over a host graph's vertex set, stored as an edge list
// with a degree table kept in sync.
struct SpanningTree {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;

    int order() const { return static_cast<int>(degree.size()); }
    int max_degree() const {
        int m = 0;
        for (int d : degree) m = d > m ? d : m;
        return m;
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(degree.size());
        for (auto [a, b] : edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }
};

}  // namespace plsub

#endif
