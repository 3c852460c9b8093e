#include "doctest.h"

#include <algorithm>
#include <random>

#include "plsub/embed.hpp"
#include "plsub/errors.hpp"
#include "plsub/quad.hpp"
#include "plsub/structure.hpp"
#include "support/naive.hpp"

using namespace plsub;

namespace {

Ordering natural_order(int n) {
    Ordering o;
    for (int v = 0; v < n; ++v) o.push_back(v);
    return o;
}

Graph graph_from_mask(int n, unsigned long mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

SpanningTree edge_tree() {
    SpanningTree t;
    t.edges = {{0, 1}};
    t.degree = {1, 1};
    return t;
}

std::vector<std::vector<int>> halves(int n) {
    std::vector<std::vector<int>> parts(2);
    for (int v = 0; v < n; ++v) parts[(size_t)(v >= n / 2)].push_back(v);
    return parts;
}

}  // namespace

TEST_CASE("arrangeability_at examples") {
    CHECK(arrangeability_at(naive::path(8), natural_order(8)) == 1);
    CHECK(arrangeability_at(naive::path(8), natural_order(8), false) == 0);
    CHECK(arrangeability_at(naive::complete(6), natural_order(6)) == 5);
    CHECK(arrangeability_at(Graph(5), natural_order(5)) == 0);
    CHECK_THROWS_AS(arrangeability_at(naive::path(4), {0, 1, 2}), BadOrder);
    CHECK_THROWS_AS(arrangeability_at(naive::path(4), {0, 1, 2, 2}), BadOrder);
}

TEST_CASE("arrangeability_at agrees with the literal formula") {
    // all graphs on <= 5 vertices, all orderings
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        Ordering base = natural_order(n);
        for (unsigned long mask = 0; mask < (1ul << pairs); ++mask) {
            auto g = graph_from_mask(n, mask);
            Ordering ord = base;
            do {
                CHECK(arrangeability_at(g, ord) == naive::arrangeability_naive(g, ord));
                CHECK(arrangeability_at(g, ord, false) ==
                      naive::arrangeability_naive(g, ord, false));
            } while (std::next_permutation(ord.begin(), ord.end()));
        }
    }
    // all graphs on 6 vertices, random orderings
    std::mt19937_64 rng(5);
    for (unsigned long mask = 0; mask < (1ul << 15); ++mask) {
        auto g = graph_from_mask(6, mask);
        Ordering ord = natural_order(6);
        std::shuffle(ord.begin(), ord.end(), rng);
        CHECK(arrangeability_at(g, ord) == naive::arrangeability_naive(g, ord));
    }
    // sampled graphs on 7 vertices
    for (int trial = 0; trial < 4000; ++trial) {
        auto g = graph_from_mask(7, rng() & ((1ul << 21) - 1));
        Ordering ord = natural_order(7);
        std::shuffle(ord.begin(), ord.end(), rng);
        CHECK(arrangeability_at(g, ord) == naive::arrangeability_naive(g, ord));
        CHECK(arrangeability_at(g, ord, false) == naive::arrangeability_naive(g, ord, false));
    }
}

TEST_CASE("ordering_heuristic") {
    Graph star(6);
    for (int v = 1; v < 6; ++v) star.add_edge(0, v);
    auto so = ordering_heuristic(star);
    CHECK(arrangeability_at(star, so) <= 2);
    CHECK(ordering_heuristic(star) == so);  // deterministic

    CHECK(arrangeability_at(naive::cycle(6), ordering_heuristic(naive::cycle(6))) <= 3);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 20 + static_cast<int>(rng() % 81);
        Graph tree(n);
        for (int v = 1; v < n; ++v) tree.add_edge(static_cast<int>(rng() % (size_t)v), v);
        CHECK(arrangeability_at(tree, ordering_heuristic(tree)) <= 2);
    }
}

TEST_CASE("arrangeability of generated quadrangulations is finite and small") {
    std::mt19937_64 rng(77);
    int worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int half = 300 + static_cast<int>(rng() % 2200);  // n up to 5000
        auto q = build_quadrangulation(halves(2 * half), edge_tree(), true);
        int a = arrangeability_at(q.plane.g, ordering_heuristic(q.plane.g));
        CHECK(a >= 1);
        worst = std::max(worst, a);
    }
    MESSAGE("max arrangeability over 100 quadrangulations: " << worst);
    CHECK(worst < 1000000);  // finiteness; the value itself is only reported
}

TEST_CASE("greedy_blowup_embed into a noiseless blow-up") {
    auto q = build_quadrangulation(halves(2000), edge_tree(), true);
    auto [ghost, labels] = gen_tree_blowup({{0, 1}}, {1000, 1000}, 0.0, 0);
    auto clusters = halves(2000);
    EmbedOptions opts;
    opts.waive_degree_bound = true;
    auto phi = greedy_blowup_embed(q.plane.g, halves(2000), ghost, clusters, {}, opts);
    verify_embedding(q.plane.g, halves(2000), ghost, clusters, phi);
}

TEST_CASE("greedy_blowup_embed into a noisy half-density blow-up") {
    const int m = 1000;
    auto q = build_quadrangulation(halves(2 * m), edge_tree(), true);
    Graph ghost(2 * m);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v)
            if (coin(rng) < 0.5) ghost.add_edge(u, v);
    EmbedOptions opts;
    opts.waive_degree_bound = true;
    opts.seed = 4;
    auto phi = greedy_blowup_embed(q.plane.g, halves(2 * m), ghost, halves(2 * m), {}, opts);
    verify_embedding(q.plane.g, halves(2 * m), ghost, halves(2 * m), phi);
}

TEST_CASE("greedy_blowup_embed preconditions and failure") {
    // max degree beyond sqrt(n)/log n
    Graph star(40);
    std::vector<std::vector<int>> sparts(2);
    sparts[0] = {0};
    for (int v = 1; v < 40; ++v) {
        star.add_edge(0, v);
        sparts[1].push_back(v);
    }
    CHECK_THROWS_AS(greedy_blowup_embed(star, sparts, star, sparts), PreconditionViolated);

    // size mismatch between a part and its cluster
    auto q4 = naive::cycle(4);
    CHECK_THROWS_AS(
        greedy_blowup_embed(q4, {{0, 1}, {2, 3}}, q4, {{0, 1, 2}, {3}}), InputError);

    // edgeless host cannot take a guest edge
    Graph h(2);
    h.add_edge(0, 1);
    Graph empty_host(2);
    EmbedOptions opts;
    opts.restarts = 5;
    try {
        greedy_blowup_embed(h, {{0}, {1}}, empty_host, {{0}, {1}}, {}, opts);
        FAIL("expected EmbedFailed");
    } catch (const EmbedFailed& e) {
        CHECK(e.restarts_used == 5);
        CHECK(e.placements_tried >= 0);
    }
}

TEST_CASE("gen_tripartite_triangulation") {
    auto [oct, col6] = gen_tripartite_triangulation(6);
    CHECK(oct.g.n() == 6);
    CHECK(oct.g.e() == 12);
    CHECK(trace_faces(oct.g, oct.rs).faces.size() == 8);
    CHECK(classify(oct.g, oct.rs) == FaceClass::Triangulation);
    for (int v = 0; v < 6; ++v) CHECK(oct.g.degree(v) == 4);  // K_{2,2,2}
    CHECK(naive::planar_bruteforce(oct.g));

    for (int s : {9, 12, 30}) {
        auto [pg, col] = gen_tripartite_triangulation(s);
        CHECK(pg.g.e() == 3 * s - 6);
        CHECK(classify(pg.g, pg.rs) == FaceClass::Triangulation);
        // proper balanced 3-coloring
        std::vector<int> sizes(3, 0);
        for (int c : col) ++sizes[(size_t)c];
        CHECK(sizes == std::vector<int>{s / 3, s / 3, s / 3});
        for (auto [u, v] : pg.g.edges()) CHECK(col[(size_t)u] != col[(size_t)v]);
    }
    CHECK_THROWS_AS(gen_tripartite_triangulation(5), BadOrder);
    CHECK_THROWS_AS(gen_tripartite_triangulation(7), BadOrder);
    CHECK_THROWS_AS(gen_tripartite_triangulation(3), BadOrder);
}

TEST_CASE("embed_tripartite") {
    // complete tripartite host: always succeeds
    Graph full(12);
    std::vector<std::vector<int>> cl(3);
    for (int v = 0; v < 12; ++v) cl[(size_t)(v / 4)].push_back(v);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            if (u / 4 != v / 4) full.add_edge(u, v);
    auto [t6, col6] = gen_tripartite_triangulation(6);
    auto phi = embed_tripartite(full, cl, t6, col6);
    for (auto [u, v] : t6.g.edges()) CHECK(full.has_edge(phi.map[(size_t)u], phi.map[(size_t)v]));
    for (int v = 0; v < 6; ++v) CHECK(phi.map[(size_t)v] / 4 == col6[(size_t)v]);

    // dense random clusters, s = 9: 10 seeded runs all succeed
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph dense(600);
    std::vector<std::vector<int>> big(3);
    for (int v = 0; v < 600; ++v) big[(size_t)(v / 200)].push_back(v);
    for (int u = 0; u < 600; ++u)
        for (int v = u + 1; v < 600; ++v)
            if (u / 200 != v / 200 && coin(rng) < 0.9) dense.add_edge(u, v);
    auto [t9, col9] = gen_tripartite_triangulation(9);
    for (int run = 0; run < 10; ++run) {
        EmbedOptions opts;
        opts.seed = 100 + static_cast<std::uint64_t>(run);
        auto p9 = embed_tripartite(dense, big, t9, col9, opts);
        for (auto [u, v] : t9.g.edges())
            CHECK(dense.has_edge(p9.map[(size_t)u], p9.map[(size_t)v]));
    }

    // sparse clusters defeat the greedy embedder
    Graph sparse(600);
    for (int u = 0; u < 600; ++u)
        for (int v = u + 1; v < 600; ++v)
            if (u / 200 != v / 200 && coin(rng) < 0.05) sparse.add_edge(u, v);
    auto [t30, col30] = gen_tripartite_triangulation(30);
    EmbedOptions few;
    few.restarts = 5;
    CHECK_THROWS_AS(embed_tripartite(sparse, big, t30, col30, few), EmbedFailed);

    // class that cannot fit
    std::vector<std::vector<int>> tiny(3);
    tiny[0] = {0};
    tiny[1] = {1, 2};
    tiny[2] = {3, 4};
    CHECK_THROWS_AS(embed_tripartite(full, tiny, t6, col6), InputError);
}
