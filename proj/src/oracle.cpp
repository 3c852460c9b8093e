#include "plsub/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "plsub/errors.hpp"

namespace plsub {

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

long planar_cap(int n, long e, bool bipartite) {
    if (n <= 2) return e;  // at most one edge anyway
    return bipartite ? 2L * n - 4 : 3L * n - 6;
}

bool planar_with(const std::vector<std::pair<int, int>>& edges, int n) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return planarity_embed(g).planar();
}

struct ComponentSearch {
    const std::vector<std::pair<int, int>>& edges;
    int n;
    long cap;
    long budget;
    long nodes = 0;
    bool exact = true;
    long best = 0;
    std::vector<size_t> best_pick;
    std::vector<size_t> pick;

    void dfs(size_t idx, std::vector<std::pair<int, int>>& chosen) {
        if (best >= cap || !exact) return;
        if (++nodes > budget) {
            exact = false;
            return;
        }
        if (static_cast<long>(chosen.size()) > best) {
            best = static_cast<long>(chosen.size());
            best_pick = pick;
        }
        if (idx == edges.size()) return;
        const long remaining = static_cast<long>(edges.size() - idx);
        if (static_cast<long>(chosen.size()) + remaining <= best) return;
        // include edges[idx] when the subgraph stays planar
        chosen.push_back(edges[idx]);
        if (planar_with(chosen, n)) {
            pick.push_back(idx);
            dfs(idx + 1, chosen);
            pick.pop_back();
        }
        chosen.pop_back();
        dfs(idx + 1, chosen);
    }
};

}  // namespace

PlanarityResult pl_exact(const Graph& g, long node_budget, bool strict_budget) {
    PlanarityResult out;
    out.exact = true;
    std::vector<std::pair<int, int>> witness;
    for (const auto& comp : g.components()) {
        std::vector<int> old_to_new;
        Graph sub = g.induced(comp, &old_to_new);
        auto edges = sub.edges();
        // descending degree-sum order for early strong incumbents
        std::stable_sort(edges.begin(), edges.end(), [&](auto a, auto b) {
            return sub.degree(a.first) + sub.degree(a.second) >
                   sub.degree(b.first) + sub.degree(b.second);
        });
        ComponentSearch search{edges,
                               sub.n(),
                               planar_cap(sub.n(), sub.e(), is_bipartite(sub)),
                               node_budget - out.nodes_explored,
                               0,
                               true,
                               0,
                               {},
                               {}};
        std::vector<std::pair<int, int>> chosen;
        search.dfs(0, chosen);
        out.nodes_explored += search.nodes;
        out.exact = out.exact && search.exact;
        out.value += search.best;
        for (size_t i : search.best_pick) {
            auto [u, v] = edges[i];
            witness.emplace_back(comp[static_cast<size_t>(u)], comp[static_cast<size_t>(v)]);
        }
        if (!search.exact) break;
    }
    if (!out.exact && strict_budget)
        throw BudgetExhausted("node budget exhausted; best planar subgraph found has " +
                                  std::to_string(out.value) + " edges",
                              out.value);
    std::sort(witness.begin(), witness.end());
    out.witness_edges = std::move(witness);
    Graph w(g.n());
    for (auto [u, v] : out.witness_edges) w.add_edge(u, v);
    auto emb = planarity_embed(w);
    if (!emb.planar()) throw Error("internal: oracle witness is not planar");
    out.witness_rotation = std::move(*emb.embedding);
    return out;
}

PlanarityResult pl_greedy(const Graph& g, std::uint64_t seed) {
    PlanarityResult out;
    out.exact = false;
    auto edges = g.edges();
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    const long cap = planar_cap(g.n(), g.e(), is_bipartite(g));
    Graph w(g.n());
    for (auto [u, v] : edges) {
        if (w.e() >= cap) break;
        w.add_edge(u, v);
        ++out.nodes_explored;
        if (planarity_embed(w).planar()) {
            out.witness_edges.emplace_back(u, v);
        } else {
            // rebuild without the offending edge (Graph has no removal)
            Graph keep(g.n());
            for (auto [a, b] : out.witness_edges) keep.add_edge(a, b);
            w = std::move(keep);
        }
    }
    out.value = static_cast<long>(out.witness_edges.size());
    std::sort(out.witness_edges.begin(), out.witness_edges.end());
    Graph fin(g.n());
    for (auto [u, v] : out.witness_edges) fin.add_edge(u, v);
    auto emb = planarity_embed(fin);
    if (!emb.planar()) throw Error("internal: greedy witness is not planar");
    out.witness_rotation = std::move(*emb.embedding);
    return out;
}

}  // namespace plsub
