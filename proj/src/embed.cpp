#include "plsub/embed.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "plsub/errors.hpp"

namespace plsub {

namespace {

void check_order(const Graph& h, const Ordering& order) {
    if (static_cast<int>(order.size()) != h.n())
        throw BadOrder("ordering length does not match the graph");
    std::vector<char> seen(static_cast<size_t>(h.n()), 0);
    for (int v : order) {
        if (v < 0 || v >= h.n() || seen[static_cast<size_t>(v)])
            throw BadOrder("ordering is not a permutation of the vertices");
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

int arrangeability_at(const Graph& h, const Ordering& order, bool count_self) {
    check_order(h, order);
    const int n = h.n();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::vector<int> stamp(static_cast<size_t>(n), -1), in_s(static_cast<size_t>(n), -1);
    int best = 0;
    for (int i = 0; i < n; ++i) {
        const int xi = order[static_cast<size_t>(i)];
        // S = N(x_i) among later vertices
        for (int w : h.neighbors(xi))
            if (pos[static_cast<size_t>(w)] > i) in_s[static_cast<size_t>(w)] = i;
        int count = 0;
        for (int v : h.neighbors(xi)) {
            if (pos[static_cast<size_t>(v)] <= i) continue;  // v in S
            for (int w : h.neighbors(v)) {
                if (in_s[static_cast<size_t>(w)] == i) continue;   // w in S
                if (pos[static_cast<size_t>(w)] > i) continue;     // not among x_1..x_i
                if (!count_self && w == xi) continue;
                if (stamp[static_cast<size_t>(w)] == i) continue;  // already counted
                stamp[static_cast<size_t>(w)] = i;
                ++count;
            }
        }
        best = std::max(best, count);
    }
    return best;
}

Ordering ordering_heuristic(const Graph& h) {
    const int n = h.n();
    std::vector<int> deg(static_cast<size_t>(n));
    std::set<std::pair<int, int>> live;  // (degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = h.degree(v);
        live.insert({deg[static_cast<size_t>(v)], v});
    }
    std::vector<char> gone(static_cast<size_t>(n), 0);
    Ordering removal;
    while (!live.empty()) {
        auto [d, v] = *live.begin();
        live.erase(live.begin());
        gone[static_cast<size_t>(v)] = 1;
        removal.push_back(v);
        for (int w : h.neighbors(v))
            if (!gone[static_cast<size_t>(w)]) {
                live.erase({deg[static_cast<size_t>(w)], w});
                --deg[static_cast<size_t>(w)];
                live.insert({deg[static_cast<size_t>(w)], w});
            }
    }
    return Ordering(removal.rbegin(), removal.rend());
}

void verify_embedding(const Graph& h, const std::vector<std::vector<int>>& hparts,
                      const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                      const EmbeddingMap& phi) {
    if (static_cast<int>(phi.map.size()) != h.n()) throw InputError("embedding size mismatch");
    std::vector<char> used(static_cast<size_t>(ghost.n()), 0);
    for (int v = 0; v < h.n(); ++v) {
        const int img = phi.map[static_cast<size_t>(v)];
        if (img < 0 || img >= ghost.n() || used[static_cast<size_t>(img)])
            throw InputError("embedding is not injective into the host");
        used[static_cast<size_t>(img)] = 1;
    }
    for (auto [u, v] : h.edges())
        if (!ghost.has_edge(phi.map[static_cast<size_t>(u)], phi.map[static_cast<size_t>(v)]))
            throw InputError("guest edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " has no host image edge");
    if (phi.part_respecting) {
        if (hparts.size() != clusters.size()) throw InputError("part count mismatch");
        for (size_t i = 0; i < hparts.size(); ++i) {
            std::set<int> cl(clusters[i].begin(), clusters[i].end());
            for (int v : hparts[i])
                if (!cl.count(phi.map[static_cast<size_t>(v)]))
                    throw InputError("vertex " + std::to_string(v) +
                                     " embedded outside its declared cluster");
        }
    }
}

namespace {

// Shared randomized greedy: place guests in `order`, each into an unused
// vertex of its target cluster adjacent to every placed neighbour's image;
// one single-step backtrack per stall, then a fresh restart.
EmbeddingMap greedy_core(const Graph& h, const std::vector<int>& gpart, const Graph& ghost,
                         const std::vector<std::vector<int>>& clusters, const Ordering& order,
                         int restarts, std::uint64_t seed) {
    const BitMatrix bm(ghost);
    std::vector<int> pos(static_cast<size_t>(h.n()));
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    long placements = 0;

    std::vector<int> img(static_cast<size_t>(h.n()));
    std::vector<int> occupant(static_cast<size_t>(ghost.n()));  // host -> guest, -1 free

    auto compatible = [&](int u, int c) {
        for (int w : h.neighbors(u)) {
            const int iw = img[static_cast<size_t>(w)];
            if (iw >= 0 && !bm.get(iw, c)) return false;
        }
        return true;
    };
    auto candidates = [&](int u, int forbidden) {
        std::vector<int> out;
        for (int c : clusters[static_cast<size_t>(gpart[static_cast<size_t>(u)])])
            if (occupant[static_cast<size_t>(c)] < 0 && c != forbidden && compatible(u, c))
                out.push_back(c);
        return out;
    };
    auto assign = [&](int u, int c) {
        img[static_cast<size_t>(u)] = c;
        occupant[static_cast<size_t>(c)] = u;
        ++placements;
    };
    auto place = [&](int u, int forbidden) {
        auto cand = candidates(u, forbidden);
        if (cand.empty()) return false;
        assign(u, cand[rng() % cand.size()]);
        return true;
    };
    // Depth-1 augmentation: hand u a compatible host whose occupant can move
    // to some free compatible host of its own.
    auto relocate_for = [&](int u) {
        for (int c : clusters[static_cast<size_t>(gpart[static_cast<size_t>(u)])]) {
            const int w = occupant[static_cast<size_t>(c)];
            if (w < 0 || !compatible(u, c)) continue;
            auto cand = candidates(w, c);
            if (cand.empty()) continue;
            occupant[static_cast<size_t>(c)] = -1;
            assign(w, cand[rng() % cand.size()]);
            assign(u, c);
            return true;
        }
        return false;
    };

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::fill(img.begin(), img.end(), -1);
        std::fill(occupant.begin(), occupant.end(), -1);
        bool dead = false;
        for (int u : order) {
            if (place(u, -1)) continue;
            if (relocate_for(u)) continue;
            // no compatible host exists at all: re-place the most recently
            // placed neighbour once, then give up on this attempt
            int w = -1;
            for (int x : h.neighbors(u))
                if (img[static_cast<size_t>(x)] >= 0 &&
                    (w < 0 || pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(w)]))
                    w = x;
            if (w < 0) {
                dead = true;
                break;
            }
            const int old = img[static_cast<size_t>(w)];
            img[static_cast<size_t>(w)] = -1;
            occupant[static_cast<size_t>(old)] = -1;
            if (!place(w, old) || !place(u, -1)) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        EmbeddingMap phi;
        phi.map = img;
        return phi;
    }
    throw EmbedFailed("greedy embedding failed after " + std::to_string(restarts) + " restarts",
                      restarts, placements);
}

}  // namespace

EmbeddingMap greedy_blowup_embed(const Graph& h, const std::vector<std::vector<int>>& hparts,
                                 const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                                 const Ordering& order, const EmbedOptions& opts) {
    if (hparts.size() != clusters.size()) throw InputError("part/cluster count mismatch");
    std::vector<int> gpart(static_cast<size_t>(h.n()), -1);
    for (size_t i = 0; i < hparts.size(); ++i) {
        if (hparts[i].size() != clusters[i].size())
            throw InputError("part " + std::to_string(i) + " and its cluster differ in size");
        for (int v : hparts[i]) {
            if (v < 0 || v >= h.n() || gpart[static_cast<size_t>(v)] != -1)
                throw BadPartition("guest parts must partition the guest vertex set");
            gpart[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < h.n(); ++v)
        if (gpart[static_cast<size_t>(v)] == -1)
            throw BadPartition("guest vertex " + std::to_string(v) + " is in no part");

    const int n = h.n();
    if (!opts.waive_degree_bound && n > 3) {
        int dmax = 0;
        for (int v = 0; v < n; ++v) dmax = std::max(dmax, h.degree(v));
        const double bound = std::sqrt(static_cast<double>(n)) / std::log(static_cast<double>(n));
        if (static_cast<double>(dmax) > bound)
            throw PreconditionViolated("Delta(H) = " + std::to_string(dmax) +
                                       " exceeds sqrt(n)/log n; waive to proceed");
    }

    // the degeneracy order caps the number of already-placed neighbours at
    // each step and puts bag-interior (degree-2) vertices last
    Ordering ord = order;
    if (ord.empty()) {
        ord = ordering_heuristic(h);
    } else {
        check_order(h, ord);
    }

    auto phi = greedy_core(h, gpart, ghost, clusters, ord, opts.restarts, opts.seed);
    phi.part_respecting = true;
    verify_embedding(h, hparts, ghost, clusters, phi);
    return phi;
}

std::pair<PlaneGraph, std::vector<int>> gen_tripartite_triangulation(int s) {
    if (s < 6 || s % 3 != 0) throw BadOrder("order must be a multiple of 3, at least 6");
    const int t = s / 3;
    Graph g(s);
    std::vector<int> color(static_cast<size_t>(s));
    for (int i = 0; i < t; ++i) {
        const int u = 3 * i, v = 3 * i + 1, w = 3 * i + 2;
        color[static_cast<size_t>(u)] = 0;
        color[static_cast<size_t>(v)] = 1;
        color[static_cast<size_t>(w)] = 2;
        g.add_edge(u, v);
        g.add_edge(v, w);
        g.add_edge(u, w);
        if (i > 0) {
            // octahedron between consecutive triangles: same-color pairs stay apart
            const int pu = u - 3, pv = v - 3, pw = w - 3;
            g.add_edge(u, pv);
            g.add_edge(u, pw);
            g.add_edge(v, pw);
            g.add_edge(v, pu);
            g.add_edge(w, pu);
            g.add_edge(w, pv);
        }
    }
    auto outcome = planarity_embed(g);
    if (!outcome.planar()) throw Error("internal: stacked octahedra came out nonplanar");
    PlaneGraph pg{std::move(g), std::move(*outcome.embedding)};
    if (classify(pg.g, pg.rs) != FaceClass::Triangulation)
        throw Error("internal: stacked octahedra are not a triangulation");
    return {std::move(pg), std::move(color)};
}

EmbeddingMap embed_tripartite(const Graph& ghost, const std::vector<std::vector<int>>& clusters,
                              const PlaneGraph& t3, const std::vector<int>& coloring,
                              const EmbedOptions& opts) {
    if (clusters.size() != 3) throw InputError("need exactly three clusters");
    if (static_cast<int>(coloring.size()) != t3.g.n()) throw InputError("coloring size mismatch");
    std::vector<long> class_size(3, 0);
    for (int c : coloring) {
        if (c < 0 || c > 2) throw InputError("coloring must use colors 0,1,2");
        ++class_size[static_cast<size_t>(c)];
    }
    for (int c = 0; c < 3; ++c)
        if (class_size[static_cast<size_t>(c)] > static_cast<long>(clusters[static_cast<size_t>(c)].size()))
            throw InputError("color class " + std::to_string(c) + " does not fit its cluster");

    auto phi = greedy_core(t3.g, coloring, ghost, clusters, ordering_heuristic(t3.g),
                           opts.restarts, opts.seed);
    phi.part_respecting = false;  // classes may be smaller than the clusters
    std::vector<std::vector<int>> dummy;
    verify_embedding(t3.g, dummy, ghost, dummy, phi);
    // class containment check, done directly since sizes need not match
    for (int v = 0; v < t3.g.n(); ++v) {
        const auto& cl = clusters[static_cast<size_t>(coloring[static_cast<size_t>(v)])];
        if (std::find(cl.begin(), cl.end(), phi.map[static_cast<size_t>(v)]) == cl.end())
            throw Error("internal: tripartite embedding left its cluster");
    }
    return phi;
}

}  // namespace plsub
