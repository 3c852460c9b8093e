#include "plsub/plane.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "plsub/errors.hpp"

namespace plsub {

bool RotationSystem::consistent_with(const Graph& g) const {
    if (n() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> sorted = order[static_cast<size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) return false;
    }
    return true;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

PlanarityOutcome planarity_embed(const Graph& g) {
    BoostGraph bg(static_cast<size_t>(g.n()));
    for (auto [u, v] : g.edges()) boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), bg);
    auto e_index = boost::get(boost::edge_index, bg);
    int idx = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(e_index, *ei, idx++);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(static_cast<size_t>(g.n()));
    std::vector<Edge> kuratowski;

    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    PlanarityOutcome out;
    if (planar) {
        RotationSystem rs;
        rs.order.resize(static_cast<size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            for (const Edge& e : embedding[static_cast<size_t>(v)]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                rs.order[static_cast<size_t>(v)].push_back(a == v ? b : a);
            }
        out.embedding = std::move(rs);
    } else {
        NonplanarWitness w;
        std::vector<int> deg(static_cast<size_t>(g.n()), 0);
        for (const Edge& e : kuratowski) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            w.edges.emplace_back(std::min(a, b), std::max(a, b));
            ++deg[static_cast<size_t>(a)];
            ++deg[static_cast<size_t>(b)];
        }
        std::sort(w.edges.begin(), w.edges.end());
        w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
        int max_deg = 0;
        for (int d : deg) max_deg = std::max(max_deg, d);
        w.kind = max_deg >= 4 ? "K5" : (max_deg == 3 ? "K33" : "unknown");
        out.witness = std::move(w);
    }
    return out;
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rs, bool check_euler) {
    if (!rs.consistent_with(g)) throw InputError("rotation system does not cover the host graph");

    // position of each neighbor within order[v]
    std::vector<std::vector<std::pair<int, int>>> pos(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        const auto& ord = rs.order[static_cast<size_t>(v)];
        auto& pv = pos[static_cast<size_t>(v)];
        pv.reserve(ord.size());
        for (int i = 0; i < static_cast<int>(ord.size()); ++i) pv.emplace_back(ord[static_cast<size_t>(i)], i);
        std::sort(pv.begin(), pv.end());
    }
    auto index_of = [&pos](int v, int nb) {
        const auto& pv = pos[static_cast<size_t>(v)];
        auto it = std::lower_bound(pv.begin(), pv.end(), std::make_pair(nb, -1));
        return it->second;
    };

    // directed edge id: for edge at position i of order[v], id = base[v] + i
    std::vector<int> base(static_cast<size_t>(g.n()) + 1, 0);
    for (int v = 0; v < g.n(); ++v) base[static_cast<size_t>(v) + 1] = base[static_cast<size_t>(v)] + g.degree(v);
    std::vector<char> used(static_cast<size_t>(base[static_cast<size_t>(g.n())]), 0);

    FaceSet fs;
    for (int u = 0; u < g.n(); ++u) {
        const auto& ord = rs.order[static_cast<size_t>(u)];
        for (int i = 0; i < static_cast<int>(ord.size()); ++i) {
            if (used[static_cast<size_t>(base[static_cast<size_t>(u)] + i)]) continue;
            std::vector<int> walk;
            int x = u, y = ord[static_cast<size_t>(i)];
            int xi = i;
            while (!used[static_cast<size_t>(base[static_cast<size_t>(x)] + xi)]) {
                used[static_cast<size_t>(base[static_cast<size_t>(x)] + xi)] = 1;
                walk.push_back(x);
                int yi = index_of(y, x);
                int deg_y = g.degree(y);
                int zi = (yi + 1) % deg_y;
                int z = rs.order[static_cast<size_t>(y)][static_cast<size_t>(zi)];
                x = y;
                xi = zi;
                y = z;
            }
            fs.faces.push_back(std::move(walk));
        }
    }

    auto comps = g.components();
    fs.component_count = static_cast<int>(comps.size());
    if (check_euler) {
        std::vector<int> comp_of(static_cast<size_t>(g.n()), -1);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            for (int v : comps[static_cast<size_t>(c)]) comp_of[static_cast<size_t>(v)] = c;
        std::vector<long> fc(comps.size(), 0), ec(comps.size(), 0), nc(comps.size(), 0);
        for (const auto& f : fs.faces) ++fc[static_cast<size_t>(comp_of[static_cast<size_t>(f[0])])];
        for (auto [a, b] : g.edges()) ++ec[static_cast<size_t>(comp_of[static_cast<size_t>(a)])], (void)b;
        for (size_t c = 0; c < comps.size(); ++c) nc[c] = static_cast<long>(comps[c].size());
        for (size_t c = 0; c < comps.size(); ++c) {
            if (ec[c] == 0) continue;  // isolated vertices have no face walks
            if (nc[c] - ec[c] + fc[c] != 2)
                throw EulerViolation("component fails n - e + f = 2: n=" + std::to_string(nc[c]) +
                                     " e=" + std::to_string(ec[c]) + " f=" + std::to_string(fc[c]));
        }
    }
    return fs;
}

FaceClass classify(const Graph& g, const RotationSystem& rs) {
    FaceSet fs = trace_faces(g, rs, true);
    bool all4 = true, all3 = true;
    for (const auto& f : fs.faces) {
        all4 = all4 && f.size() == 4;
        all3 = all3 && f.size() == 3;
    }
    if (!fs.faces.empty() && all4) return FaceClass::Quadrangulation;
    if (!fs.faces.empty() && all3) return FaceClass::Triangulation;
    return FaceClass::Other;
}

void write_rotation(std::ostream& os, const RotationSystem& rs) {
    for (const auto& ord : rs.order) {
        for (size_t i = 0; i < ord.size(); ++i) os << (i ? " " : "") << ord[i];
        os << '\n';
    }
}

RotationSystem read_rotation(std::istream& is, int n) {
    RotationSystem rs;
    rs.order.resize(static_cast<size_t>(n));
    std::string line;
    for (int v = 0; v < n; ++v) {
        if (!std::getline(is, line)) throw InputError("truncated rotation system");
        std::istringstream ls(line);
        int x;
        while (ls >> x) rs.order[static_cast<size_t>(v)].push_back(x);
    }
    return rs;
}

}  // namespace plsub
