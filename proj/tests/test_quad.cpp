#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "plsub/errors.hpp"
#include "plsub/quad.hpp"
#include "plsub/structure.hpp"
#include "support/naive.hpp"

using namespace plsub;

namespace {

SpanningTree make_tree(const std::vector<std::pair<int, int>>& edges, int r) {
    SpanningTree t;
    t.edges = edges;
    t.degree.assign(static_cast<size_t>(r), 0);
    for (auto [a, b] : edges) {
        ++t.degree[(size_t)a];
        ++t.degree[(size_t)b];
    }
    return t;
}

std::vector<std::vector<int>> consecutive_parts(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> parts;
    int at = 0;
    for (int s : sizes) {
        std::vector<int> p;
        for (int i = 0; i < s; ++i) p.push_back(at++);
        parts.push_back(std::move(p));
    }
    return parts;
}

std::multiset<size_t> face_length_multiset(const PlaneGraph& pg) {
    auto fs = trace_faces(pg.g, pg.rs);
    std::multiset<size_t> out;
    for (const auto& f : fs.faces) out.insert(f.size());
    return out;
}

}  // namespace

TEST_CASE("icbrt") {
    CHECK(icbrt(0) == 0);
    CHECK(icbrt(1) == 1);
    CHECK(icbrt(7) == 1);
    CHECK(icbrt(8) == 2);
    CHECK(icbrt(26) == 2);
    CHECK(icbrt(27) == 3);
    CHECK(icbrt(6000) == 18);
    CHECK(icbrt(32768) == 32);
    CHECK(icbrt(1000000000000L) == 10000);
    CHECK_THROWS_AS(icbrt(-1), OutOfRange);
}

TEST_CASE("build_quadrangulation tiny single edge") {
    auto q = build_quadrangulation(consecutive_parts({3, 3}), make_tree({{0, 1}}, 2), true);
    CHECK(q.plane.g.n() == 6);
    CHECK(q.plane.g.e() == 8);  // 2n - 4
    CHECK(classify(q.plane.g, q.plane.rs) == FaceClass::Quadrangulation);
    CHECK(naive::planar_bruteforce(q.plane.g));  // independent planarity check
    CHECK(quad_invariant_violations(q).empty());
}

TEST_CASE("build_quadrangulation single tree edge at full scale") {
    // n = 32768 meets the (16r)^3 threshold for r = 2 exactly
    auto q = build_quadrangulation(consecutive_parts({16384, 16384}), make_tree({{0, 1}}, 2));
    CHECK(q.plane.g.n() == 32768);
    CHECK(q.plane.g.e() == 2 * 32768 - 4);
    auto bad = quad_invariant_violations(q);
    for (const auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
    // chunk plan minimality: ceil(|V_i| / floor(n^{1/3})) chunks of size <= cap
    CHECK(q.chunk_plan.cap == 32);
    for (const auto& part : q.chunk_plan.chunks) {
        CHECK(part.size() == (16384 + 31) / 32);
        for (const auto& c : part) CHECK(static_cast<int>(c.size()) <= 32);
    }
}

TEST_CASE("build_quadrangulation path and star examples") {
    auto path = build_quadrangulation(consecutive_parts({2000, 2000, 2000}),
                                      make_tree({{0, 1}, {1, 2}}, 3), true);
    CHECK(path.plane.g.n() == 6000);
    CHECK(path.plane.g.e() == 2 * 6000 - 4);
    int dmax = 0;
    for (int v = 0; v < 6000; ++v) dmax = std::max(dmax, path.plane.g.degree(v));
    CHECK(dmax <= 20);  // 6000^{1/3} + 2
    CHECK(quad_invariant_violations(path).empty());

    auto star = build_quadrangulation(consecutive_parts({8192, 8192, 8192, 8192}),
                                      make_tree({{0, 1}, {0, 2}, {0, 3}}, 4), true);
    CHECK(classify(star.plane.g, star.plane.rs) == FaceClass::Quadrangulation);
    auto bad = quad_invariant_violations(star);
    for (const auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
}

TEST_CASE("build_quadrangulation invariant suite on random trees") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 5);  // 2..6
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < r; ++v) edges.emplace_back(static_cast<int>(rng() % (size_t)v), v);
        const int base = 18000 / r;
        std::vector<int> sizes;
        for (int i = 0; i < r; ++i) sizes.push_back(base + static_cast<int>(rng() % 32));
        auto q = build_quadrangulation(consecutive_parts(sizes), make_tree(edges, r), true);
        auto bad = quad_invariant_violations(q);
        for (const auto& b : bad) MESSAGE("r=" << r << " trial=" << trial << ": " << b);
        CHECK(bad.empty());
    }
}

TEST_CASE("build_quadrangulation preconditions") {
    auto tree2 = make_tree({{0, 1}}, 2);
    CHECK_THROWS_AS(build_quadrangulation(consecutive_parts({3, 3}), tree2, false),
                    PreconditionViolated);  // n far below (16r)^3
    CHECK_THROWS_AS(build_quadrangulation(consecutive_parts({4, 9}), tree2, true), Unbalanced);
    CHECK_THROWS_AS(build_quadrangulation(consecutive_parts({4}), make_tree({}, 1), true),
                    InputError);
    CHECK_THROWS_AS(build_quadrangulation(consecutive_parts({1, 4}), tree2, true), InputError);
    CHECK_THROWS_AS(
        build_quadrangulation({{0, 1, 2}, {2, 3, 4}}, tree2, true),  // vertex 2 repeated
        BadPartition);
    CHECK_THROWS_AS(build_quadrangulation(consecutive_parts({3, 3, 3}),
                                          make_tree({{0, 1}, {0, 1}}, 3), true),
                    NotATree);
}

TEST_CASE("build_quadrangulation explicit blow-up graph") {
    auto [g, labels] = gen_tree_blowup({{0, 1}, {1, 2}}, {8, 8, 8}, 0.0, 0);
    std::vector<std::vector<int>> parts(3);
    for (int v = 0; v < g.n(); ++v) parts[(size_t)labels[(size_t)v]].push_back(v);
    auto tree = make_tree({{0, 1}, {1, 2}}, 3);
    auto q = build_quadrangulation(g, parts, tree, true);
    CHECK(q.plane.g.e() == 2 * 24 - 4);
    // every constructed edge must exist in the blow-up
    for (auto [u, v] : q.plane.g.edges()) CHECK(g.has_edge(u, v));

    // a missing cross edge is rejected
    Graph incomplete(24);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 8)) incomplete.add_edge(u, v);
    CHECK_THROWS_AS(build_quadrangulation(incomplete, parts, tree, true), InputError);
}

TEST_CASE("reorder_bag") {
    auto q = build_quadrangulation(consecutive_parts({256, 256}), make_tree({{0, 1}}, 2), true);
    REQUIRE_FALSE(q.bags.empty());
    int bi = -1;
    for (size_t i = 0; i < q.bags.size(); ++i)
        if (q.bags[i].order() >= 6) bi = static_cast<int>(i);
    REQUIRE(bi >= 0);
    const auto before_faces = face_length_multiset(q.plane);
    const auto members = q.bags[(size_t)bi].members;

    // identity: nothing changes
    auto rs_before = q.plane.rs.order;
    reorder_bag(q, bi, members);
    CHECK(q.plane.rs.order == rs_before);

    // reversal: still a quadrangulation with the same face-length multiset
    std::vector<int> rev(members.rbegin(), members.rend());
    reorder_bag(q, bi, rev);
    CHECK(q.bags[(size_t)bi].members == rev);
    CHECK(classify(q.plane.g, q.plane.rs) == FaceClass::Quadrangulation);
    CHECK(face_length_multiset(q.plane) == before_faces);
    verify_bag(q.plane, q.bags[(size_t)bi]);

    // a proper shuffle round-trips through the invariants too
    std::vector<int> shuf = members;
    std::mt19937_64 rng(3);
    std::shuffle(shuf.begin(), shuf.end(), rng);
    reorder_bag(q, bi, shuf);
    CHECK(quad_invariant_violations(q).empty());

    // permutations touching an anchor or of the wrong size are rejected
    std::vector<int> with_anchor = shuf;
    with_anchor[0] = q.bags[(size_t)bi].x1;
    CHECK_THROWS_AS(reorder_bag(q, bi, with_anchor), BadPermutation);
    std::vector<int> short_perm(shuf.begin(), shuf.end() - 1);
    CHECK_THROWS_AS(reorder_bag(q, bi, short_perm), BadPermutation);
}

TEST_CASE("plan_insertions asymptotic thresholds") {
    // bags over vertices 0..9, leftovers 10..; n_param = 128^3 so the
    // thresholds are good >= 4 neighbours, capacity 1
    std::vector<Bag> bags{{0, 1, {2, 3, 4, 5, 6, 7}}};
    const long big = 128L * 128 * 128;

    Graph h(12);
    auto empty = plan_insertions(bags, {}, h, 1, big);
    CHECK(empty.good_threshold == 4);
    CHECK(empty.capacity == 1);
    CHECK(empty.assignment == std::vector<std::vector<int>>{{}});

    for (int m = 2; m <= 7; ++m) h.add_edge(10, m);
    auto plan = plan_insertions(bags, {10}, h, 1, big);
    CHECK(plan.assignment[0] == std::vector<int>{10});

    // a second leftover cannot fit: capacity 1
    for (int m = 2; m <= 7; ++m) h.add_edge(11, m);
    CHECK_THROWS_AS(plan_insertions(bags, {10, 11}, h, 1, big), UnassignableVertex);

    // zero neighbours anywhere
    Graph h0(12);
    try {
        plan_insertions(bags, {10}, h0, 1, big);
        FAIL("expected UnassignableVertex");
    } catch (const UnassignableVertex& e) {
        CHECK(e.vertex == 10);
        CHECK(e.good_bag_count == 0);
    }

    // leftover overlapping the quadrangulation
    Graph h1(12);
    CHECK_THROWS_AS(plan_insertions(bags, {3}, h1, 1, big), Overlap);
}

TEST_CASE("plan_insertions relaxed mode") {
    std::vector<Bag> bags{{0, 1, {2, 3, 4, 5, 6, 7, 8, 9}}};  // order 8, cap 2
    Graph h(13);
    for (int v : {10, 11, 12})
        for (int m = 2; m <= 9; ++m) h.add_edge(v, m);
    InsertionOptions relaxed{true};
    auto plan = plan_insertions(bags, {10, 11}, h, 1, 13, relaxed);
    CHECK(plan.relaxed);
    CHECK(plan.assignment[0] == std::vector<int>{10, 11});
    CHECK_THROWS_AS(plan_insertions(bags, {10, 11, 12}, h, 1, 13, relaxed), UnassignableVertex);
}

TEST_CASE("execute_insertions single vertex") {
    auto q = build_quadrangulation(consecutive_parts({256, 256}), make_tree({{0, 1}}, 2), true);
    size_t bi = 0;
    while (q.bags[bi].order() < 6) ++bi;
    const int n0 = q.plane.g.n();
    const long e0 = q.plane.g.e();
    const size_t bag_count0 = q.bags.size();

    // host: the leftover n0 is adjacent to 4 members of the chosen bag
    Graph host(n0 + 1);
    for (int j = 0; j < 4; ++j) host.add_edge(n0, q.bags[bi].members[(size_t)j]);
    std::vector<int> want = {q.bags[bi].members[0], q.bags[bi].members[1]};

    const long big = 128L * 128 * 128;
    auto plan = plan_insertions(q.bags, {n0}, host, 1, big);
    REQUIRE(plan.assignment[bi] == std::vector<int>{n0});

    std::vector<QuadResult> qs{std::move(q)};
    execute_insertions(qs, plan, host);
    auto& out = qs[0];
    CHECK(out.plane.g.n() == n0 + 1);
    CHECK(out.plane.g.e() == e0 + 2);  // 2(n+1)-4 = 2n-4+2
    CHECK(classify(out.plane.g, out.plane.rs) == FaceClass::Quadrangulation);
    CHECK(out.plane.rs.consistent_with(out.plane.g));
    // the inserted vertex forms a bag of order 1 on its member pair
    REQUIRE(out.bags.size() == bag_count0 + 1);
    const Bag& fresh = out.bags.back();
    CHECK(fresh.members == std::vector<int>{n0});
    CHECK(((fresh.x1 == want[0] && fresh.x2 == want[1]) ||
           (fresh.x1 == want[1] && fresh.x2 == want[0])));
    for (const auto& b : out.bags) verify_bag(out.plane, b);
}

TEST_CASE("execute_insertions fills a bag to capacity") {
    auto q = build_quadrangulation(consecutive_parts({1024, 1024}), make_tree({{0, 1}}, 2), true);
    size_t bi = 0;
    while (q.bags[bi].order() < 9) ++bi;
    const int n0 = q.plane.g.n();
    const long e0 = q.plane.g.e();

    Graph host(n0 + 2);
    for (int v : {n0, n0 + 1})
        for (int m : q.bags[bi].members) host.add_edge(v, m);
    const long big = 256L * 256 * 256;  // good >= 8, capacity 2
    auto plan = plan_insertions(q.bags, {n0, n0 + 1}, host, 1, big);
    CHECK(plan.capacity == 2);
    REQUIRE(plan.assignment[bi].size() == 2);
    const int old_order = q.bags[bi].order();
    const long old_uncovered = q.uncovered_count;

    std::vector<QuadResult> qs{std::move(q)};
    execute_insertions(qs, plan, host);
    auto& out = qs[0];
    CHECK(out.plane.g.e() == e0 + 4);
    CHECK(classify(out.plane.g, out.plane.rs) == FaceClass::Quadrangulation);
    CHECK(out.bags[bi].order() == old_order - 4);
    CHECK(out.uncovered_count == old_uncovered + 4);
    for (const auto& b : out.bags) verify_bag(out.plane, b);

    // empty plan is the identity
    auto before = out.plane.rs.order;
    auto noop = plan_insertions(out.bags, {}, host, 1, big);
    execute_insertions(qs, noop, host);
    CHECK(qs[0].plane.rs.order == before);
}

TEST_CASE("execute_insertions pairing failure") {
    auto q = build_quadrangulation(consecutive_parts({256, 256}), make_tree({{0, 1}}, 2), true);
    size_t bi = 0;
    while (q.bags[bi].order() < 6) ++bi;
    const int n0 = q.plane.g.n();
    Graph host(n0 + 1);
    host.add_edge(n0, q.bags[bi].members[0]);  // only one member neighbour

    InsertionPlan plan;  // hand-built plan that skips the neighbour check
    plan.leftovers = {n0};
    plan.assignment.assign(q.bags.size(), {});
    plan.assignment[bi] = {n0};
    std::vector<QuadResult> qs{std::move(q)};
    CHECK_THROWS_AS(execute_insertions(qs, plan, host), PairingImpossible);
}

TEST_CASE("remap_quad") {
    auto q = build_quadrangulation(consecutive_parts({64, 64}), make_tree({{0, 1}}, 2), true);
    const int n = q.plane.g.n();
    std::vector<int> image((size_t)n);
    for (int v = 0; v < n; ++v) image[(size_t)v] = v;
    std::mt19937_64 rng(8);
    std::shuffle(image.begin(), image.end(), rng);

    auto m = remap_quad(q, image, n);
    CHECK(m.plane.g.e() == q.plane.g.e());
    CHECK(classify(m.plane.g, m.plane.rs) == FaceClass::Quadrangulation);
    CHECK(quad_invariant_violations(m).empty());
    for (auto [u, v] : q.plane.g.edges())
        CHECK(m.plane.g.has_edge(image[(size_t)u], image[(size_t)v]));

    std::vector<int> collide = image;
    collide[1] = collide[0];
    CHECK_THROWS_AS(remap_quad(q, collide, n), InputError);
}
