#include "doctest.h"

#include <sstream>

#include "plsub/errors.hpp"
#include "plsub/graph.hpp"

using namespace plsub;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph_stats on basic families") {
    auto s = graph_stats(complete(4));
    CHECK(s.n == 4);
    CHECK(s.e == 6);
    CHECK(s.min_degree == 3);
    CHECK(s.component_sizes == std::vector<int>{4});

    auto e = graph_stats(Graph(5));
    CHECK(e.n == 5);
    CHECK(e.e == 0);
    CHECK(e.min_degree == 0);
    CHECK(e.component_sizes == std::vector<int>{1, 1, 1, 1, 1});

    auto b = graph_stats(gen_disjoint_biclique(2, 3));
    CHECK(b.n == 12);
    CHECK(b.e == 18);
    CHECK(b.min_degree == 3);
    CHECK(b.component_sizes == std::vector<int>{6, 6});
}

TEST_CASE("gen_disjoint_biclique arithmetic") {
    auto g = gen_disjoint_biclique(1, 3);
    CHECK(g.n() == 6);
    CHECK(g.e() == 9);

    auto m = gen_disjoint_biclique(3, 1);
    CHECK(m.n() == 6);
    CHECK(m.e() == 3);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);

    // 2kt vertices, kt^2 edges, t-regular, k components of size 2t
    for (int k = 1; k <= 20; k += 6)
        for (int t = 1; t <= 20; t += 7) {
            auto s = graph_stats(gen_disjoint_biclique(k, t));
            CHECK(s.n == 2 * k * t);
            CHECK(s.e == static_cast<long>(k) * t * t);
            CHECK(s.min_degree == t);
            CHECK(static_cast<int>(s.component_sizes.size()) == k);
            for (int c : s.component_sizes) CHECK(c == 2 * t);
        }
}

TEST_CASE("gen_tree_blowup") {
    auto [g1, l1] = gen_tree_blowup({{0, 1}}, {4, 4}, 0.0, 0);
    CHECK(g1.n() == 8);
    CHECK(g1.e() == 16);
    CHECK(l1[0] == 0);
    CHECK(l1[7] == 1);

    auto [g2, l2] = gen_tree_blowup({{0, 1}, {1, 2}}, {5, 5, 5}, 0.0, 0);
    CHECK(g2.n() == 15);
    CHECK(g2.e() == 50);

    auto [g3, l3] = gen_tree_blowup({{0, 1}, {0, 2}, {0, 3}}, {10, 10, 10, 10}, 0.1, 7);
    CHECK(g3.e() >= 300);
    auto [g3b, l3b] = gen_tree_blowup({{0, 1}, {0, 2}, {0, 3}}, {10, 10, 10, 10}, 0.1, 7);
    CHECK(g3.edges() == g3b.edges());

    CHECK_THROWS_AS(gen_tree_blowup({{0, 1}, {0, 1}}, {3, 3, 3}, 0.0, 0), NotATree);
    CHECK_THROWS_AS(gen_tree_blowup({{0, 1}}, {3, 7}, 0.0, 0), Unbalanced);
}

TEST_CASE("noiseless blow-up edge count matches tree pairs exactly") {
    std::vector<std::pair<int, int>> tree{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    std::vector<int> sizes{6, 8, 5, 7, 6};
    auto [g, labels] = gen_tree_blowup(tree, sizes, 0.0, 3);
    long expect = 0;
    for (auto [a, b] : tree) expect += static_cast<long>(sizes[(size_t)a]) * sizes[(size_t)b];
    CHECK(g.e() == expect);
}

TEST_CASE("gen_random_min_degree") {
    auto k10 = gen_random_min_degree(10, 9, 0);
    CHECK(k10.e() == 45);

    auto g = gen_random_min_degree(40, 10, 1);
    CHECK(graph_stats(g).min_degree >= 10);
    auto g2 = gen_random_min_degree(40, 10, 1);
    CHECK(g.edges() == g2.edges());

    auto one = gen_random_min_degree(1, 0, 0);
    CHECK(one.n() == 1);
    CHECK(one.e() == 0);
}

TEST_CASE("edge list round trip") {
    auto [g, labels] = gen_tree_blowup({{0, 1}, {1, 2}}, {4, 5, 4}, 0.2, 11);
    std::stringstream ss;
    write_edge_list(ss, g);
    Graph h = read_edge_list(ss);
    CHECK(g.n() == h.n());
    CHECK(g.edges() == h.edges());
    CHECK(graph_hash(g) == graph_hash(h));

    std::stringstream ls;
    write_labels(ls, labels);
    CHECK(read_labels(ls, g.n()) == labels);
}

TEST_CASE("graph rejects loops and duplicates") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
}
