#include "plsub/structure.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "plsub/errors.hpp"

namespace plsub {

int compute_k(double gamma) {
    if (!(gamma > 0.0 && gamma < 0.5)) throw OutOfRange("gamma must lie in (0, 1/2)");
    const double x = 1.0 / (2.0 * gamma);
    int k = static_cast<int>(std::floor(x + 1e-9));
    return k;
}

PipelineConfig PipelineConfig::from_gamma(double gamma, const RegularityParams& params,
                                          std::uint64_t seed) {
    PipelineConfig cfg;
    cfg.gamma = gamma;
    cfg.k = compute_k(gamma);
    cfg.beta = gamma - 1.0 / (2.0 * (cfg.k + 1));
    cfg.s = 12;
    cfg.params = params;
    cfg.params.delta = params.d - 2 * params.eps;
    cfg.seed = seed;
    cfg.validate();
    return cfg;
}

void PipelineConfig::validate() const {
    if (compute_k(gamma) != k) throw InputError("k inconsistent with gamma");
    if (!(beta > 0)) throw InputError("beta must be positive");
    if (s < 6 || s % 2 != 0) throw InputError("s must be even and >= 6");
    params.validate();
}

CaseSplit case_split(const Graph& reduced, int deltaR) {
    CaseSplit out;
    out.components = reduced.components();
    for (int c = 0; c < static_cast<int>(out.components.size()); ++c) {
        const auto& comp = out.components[static_cast<size_t>(c)];
        if (static_cast<int>(comp.size()) >= 2 * deltaR) continue;
        // guaranteed by min degree > half the component order
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = a + 1; b < comp.size(); ++b) {
                if (!reduced.has_edge(comp[a], comp[b])) continue;
                for (size_t d = b + 1; d < comp.size(); ++d)
                    if (reduced.has_edge(comp[a], comp[d]) && reduced.has_edge(comp[b], comp[d])) {
                        out.small_component = true;
                        out.component_id = c;
                        out.triangle = {comp[a], comp[b], comp[d]};
                        return out;
                    }
            }
        throw TriangleNotFound("component of order " + std::to_string(comp.size()) +
                               " below 2*delta(R) contains no triangle");
    }
    return out;
}

namespace {

long tree_score(const std::vector<int>& deg) {
    long s = 0;
    for (int d : deg) s += static_cast<long>(d) * d;
    return s;
}

// components of T - u, as sorted vertex lists
std::vector<std::vector<int>> split_at(const std::vector<std::set<int>>& tadj, int u, int n) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(u)] = 1;
    for (int root : tadj[static_cast<size_t>(u)]) {
        if (seen[static_cast<size_t>(root)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(root);
        seen[static_cast<size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : tadj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

SpanningTree bounded_spanning_tree(const Graph& component, int k, SpanningTreeLog* log) {
    const int n = component.n();
    if (n == 0) throw PreconditionViolated("empty component");
    if (component.components().size() != 1) throw PreconditionViolated("component not connected");
    {
        int dmin = graph_stats(component).min_degree;
        if (n > 1 && static_cast<long>(dmin) * 2 * k < n)
            throw PreconditionViolated("min degree below v/(2k)");
    }
    const int cap = 8 * k;

    // BFS tree from vertex 0
    std::vector<std::set<int>> tadj(static_cast<size_t>(n));
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : component.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    tadj[static_cast<size_t>(v)].insert(w);
                    tadj[static_cast<size_t>(w)].insert(v);
                    q.push(w);
                }
        }
    }
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = static_cast<int>(tadj[static_cast<size_t>(v)].size());
    if (log) {
        log->scores = {tree_score(deg)};
        log->swaps = 0;
    }

    for (;;) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] > cap) {
                u = v;
                break;
            }
        if (u == -1) break;

        auto comps = split_at(tadj, u, n);
        // smallest component, ties to the one holding the lowest vertex
        size_t pick = 0;
        for (size_t c = 1; c < comps.size(); ++c)
            if (comps[c].size() < comps[pick].size() ||
                (comps[c].size() == comps[pick].size() && comps[c][0] < comps[pick][0]))
                pick = c;
        const auto& C = comps[pick];
        std::vector<char> in_c(static_cast<size_t>(n), 0);
        for (int x : C) in_c[static_cast<size_t>(x)] = 1;

        int v = -1;
        for (int w : tadj[static_cast<size_t>(u)])
            if (in_c[static_cast<size_t>(w)]) {
                v = w;
                break;
            }

        int u2 = -1;
        for (int w : component.neighbors(v))
            if (!in_c[static_cast<size_t>(w)] && w != u && deg[static_cast<size_t>(w)] < cap) {
                u2 = w;
                break;
            }
        if (u2 == -1)
            throw NoSwapAvailable("no reattachment point for vertex " + std::to_string(v));

        long before = tree_score(deg);
        tadj[static_cast<size_t>(u)].erase(v);
        tadj[static_cast<size_t>(v)].erase(u);
        tadj[static_cast<size_t>(u2)].insert(v);
        tadj[static_cast<size_t>(v)].insert(u2);
        --deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(u2)];
        long after = tree_score(deg);
        if (after >= before) throw NoSwapAvailable("swap failed to decrease score");

        // online spanning-tree validity check
        {
            long edges = 0;
            for (const auto& s : tadj) edges += static_cast<long>(s.size());
            edges /= 2;
            std::vector<char> seen(static_cast<size_t>(n), 0);
            std::queue<int> q;
            q.push(0);
            seen[0] = 1;
            int reached = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int w : tadj[static_cast<size_t>(x)])
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        ++reached;
                        q.push(w);
                    }
            }
            if (edges != n - 1 || reached != n)
                throw NoSwapAvailable("swap broke the spanning tree");
        }
        if (log) {
            log->scores.push_back(after);
            ++log->swaps;
        }
    }

    SpanningTree t;
    t.degree = deg;
    for (int v = 0; v < n; ++v)
        for (int w : tadj[static_cast<size_t>(v)])
            if (v < w) t.edges.emplace_back(v, w);
    return t;
}

}  // namespace plsub
