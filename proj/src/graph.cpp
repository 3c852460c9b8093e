#include "plsub/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>

#include "plsub/errors.hpp"

namespace plsub {

void Graph::add_edge(int u, int v) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw InputError("edge endpoint out of range");
    if (has_edge(u, v)) throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    auto& au = adj_[static_cast<size_t>(u)];
    auto& av = adj_[static_cast<size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* old_to_new) const {
    std::vector<int> map(static_cast<size_t>(n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (int w : neighbors(verts[i])) {
            int j = map[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
        }
    if (old_to_new) *old_to_new = std::move(map);
    return h;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(n()), 0);
    for (int s = 0; s < n(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : neighbors(v))
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

BitMatrix::BitMatrix(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64) {
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t* r = bits_.data() + static_cast<size_t>(u) * words_;
        for (int v : g.neighbors(u)) r[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.n();
    s.e = g.e();
    s.min_degree = 0;
    for (int v = 0; v < g.n(); ++v)
        if (v == 0 || g.degree(v) < s.min_degree) s.min_degree = g.degree(v);
    for (const auto& c : g.components()) s.component_sizes.push_back(static_cast<int>(c.size()));
    std::sort(s.component_sizes.rbegin(), s.component_sizes.rend());
    return s;
}

Graph gen_disjoint_biclique(int k, int t) {
    if (k < 1 || t < 1) throw InputError("gen_disjoint_biclique requires k,t >= 1");
    Graph g(2 * k * t);
    for (int c = 0; c < k; ++c) {
        int base = 2 * c * t;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) g.add_edge(base + i, base + t + j);
    }
    return g;
}

std::pair<Graph, std::vector<int>> gen_tree_blowup(const std::vector<std::pair<int, int>>& tree_edges,
                                                   const std::vector<int>& part_sizes,
                                                   double noise_prob, std::uint64_t seed) {
    const int r = static_cast<int>(part_sizes.size());
    if (r < 1) throw InputError("need at least one part");
    {
        // tree check: r-1 edges on [0,r) forming a connected graph
        if (static_cast<int>(tree_edges.size()) != r - 1)
            throw NotATree("expected " + std::to_string(r - 1) + " tree edges");
        Graph t(r);
        try {
            for (auto [a, b] : tree_edges) t.add_edge(a, b);
        } catch (const InputError& e) {
            throw NotATree(std::string("bad tree edge: ") + e.what());
        }
        if (t.components().size() != 1 && r > 1) throw NotATree("tree edges do not connect all parts");
    }
    int mn = part_sizes[0], mx = part_sizes[0];
    for (int s : part_sizes) {
        if (s < 1) throw InputError("part sizes must be positive");
        mn = std::min(mn, s);
        mx = std::max(mx, s);
    }
    if (mx > 2 * mn) throw Unbalanced("max part size exceeds twice the min");

    std::vector<int> offset(static_cast<size_t>(r) + 1, 0);
    for (int i = 0; i < r; ++i) offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] + part_sizes[static_cast<size_t>(i)];
    const int n = offset[static_cast<size_t>(r)];
    Graph g(n);
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < r; ++i)
        for (int v = offset[static_cast<size_t>(i)]; v < offset[static_cast<size_t>(i) + 1]; ++v) labels[static_cast<size_t>(v)] = i;

    std::vector<std::vector<char>> is_tree(static_cast<size_t>(r), std::vector<char>(static_cast<size_t>(r), 0));
    for (auto [a, b] : tree_edges) is_tree[static_cast<size_t>(a)][static_cast<size_t>(b)] = is_tree[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (is_tree[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                for (int u = offset[static_cast<size_t>(i)]; u < offset[static_cast<size_t>(i) + 1]; ++u)
                    for (int v = offset[static_cast<size_t>(j)]; v < offset[static_cast<size_t>(j) + 1]; ++v) g.add_edge(u, v);
            } else if (noise_prob > 0.0) {
                for (int u = offset[static_cast<size_t>(i)]; u < offset[static_cast<size_t>(i) + 1]; ++u)
                    for (int v = offset[static_cast<size_t>(j)]; v < offset[static_cast<size_t>(j) + 1]; ++v)
                        if (coin(rng) < noise_prob) g.add_edge(u, v);
            }
        }
    return {std::move(g), std::move(labels)};
}

Graph gen_random_min_degree(int n, int dmin, std::uint64_t seed) {
    if (n < 0 || dmin < 0 || dmin > std::max(0, n - 1))
        throw InputError("gen_random_min_degree requires 0 <= dmin <= n-1");
    Graph g(n);
    if (n <= 1) return g;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double p = std::min(1.0, 1.25 * dmin / std::max(1, n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    // repair deficient vertices with uniformly random non-neighbors
    for (int u = 0; u < n; ++u) {
        while (g.degree(u) < dmin) {
            std::vector<int> cand;
            for (int v = 0; v < n; ++v)
                if (v != u && !g.has_edge(u, v)) cand.push_back(v);
            std::uniform_int_distribution<size_t> pick(0, cand.size() - 1);
            g.add_edge(u, cand[pick(rng)]);
        }
    }
    return g;
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.n() << ' ' << g.e() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
    int n;
    long m;
    if (!(is >> n >> m) || n < 0 || m < 0) throw InputError("bad edge-list header");
    Graph g(n);
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw InputError("truncated edge list");
        if (!(0 <= u && u < v && v < n)) throw InputError("edge must satisfy 0 <= u < v < n");
        g.add_edge(u, v);
    }
    return g;
}

void write_labels(std::ostream& os, const std::vector<int>& labels) {
    for (int l : labels) os << l << '\n';
}

std::vector<int> read_labels(std::istream& is, int n) {
    std::vector<int> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        if (!(is >> labels[static_cast<size_t>(i)])) throw InputError("truncated label file");
    return labels;
}

std::uint64_t graph_hash(const Graph& g) {
    // FNV-1a over n and the sorted edge list
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

}  // namespace plsub
