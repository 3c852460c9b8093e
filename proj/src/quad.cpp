#include "plsub/quad.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>
#include <string>

#include "plsub/errors.hpp"

namespace plsub {

long icbrt(long x) {
    if (x < 0) throw OutOfRange("icbrt of negative value");
    long t = static_cast<long>(std::cbrt(static_cast<double>(x)));
    while (t > 0 && t * t * t > x) --t;
    while ((t + 1) * (t + 1) * (t + 1) <= x) ++t;
    return t;
}

namespace {

size_t find_succ_pos(const std::vector<int>& rot, int prev, int next) {
    const size_t sz = rot.size();
    for (size_t i = 0; i < sz; ++i)
        if (rot[i] == prev && rot[(i + 1) % sz] == next) return i;
    throw Error("internal: rotation lacks expected successor pair");
}

// Splice fan w_1..w_p into the quadrilateral face [u, a, u2, b]: every w_j
// becomes adjacent to u and u2 only, creating faces [u,a,u2,w_1],
// [u,w_j,u2,w_{j+1}], [u,w_p,u2,b].
void insert_fan(std::vector<std::vector<int>>& rot, int u, int a, int u2, int b,
                const std::vector<int>& fan) {
    if (fan.empty()) return;
    auto& ru = rot[static_cast<size_t>(u)];
    size_t pu = find_succ_pos(ru, b, a);
    ru.insert(ru.begin() + static_cast<long>(pu) + 1, fan.rbegin(), fan.rend());
    auto& r2 = rot[static_cast<size_t>(u2)];
    size_t p2 = find_succ_pos(r2, a, b);
    r2.insert(r2.begin() + static_cast<long>(p2) + 1, fan.begin(), fan.end());
    for (int w : fan) rot[static_cast<size_t>(w)] = {u, u2};
}

// Walk the face starting at directed edge (u, v); the walk starts [u, v, ...].
std::vector<int> trace_one_face(const RotationSystem& rs, int u, int v) {
    std::vector<int> walk{u};
    int x = u, y = v;
    const long guard = 4L * rs.n() + 8;
    for (long step = 0; step < guard; ++step) {
        const auto& ry = rs.order[static_cast<size_t>(y)];
        size_t i = 0;
        while (i < ry.size() && ry[i] != x) ++i;
        if (i == ry.size()) throw Error("internal: rotation missing reverse edge");
        int z = ry[(i + 1) % ry.size()];
        if (y == u && z == v) return walk;
        walk.push_back(y);
        x = y;
        y = z;
    }
    throw Error("internal: face walk failed to close");
}

// The 4-face [m, anchor, m', anchor'] shared by member m and m'; throws when
// the pair shares no quadrilateral face.
std::vector<int> member_pair_face(const RotationSystem& rs, int m, int m_next) {
    for (int nb : rs.order[static_cast<size_t>(m)]) {
        auto walk = trace_one_face(rs, m, nb);
        if (walk.size() == 4 && walk[2] == m_next) return walk;
    }
    throw NotABag("members " + std::to_string(m) + " and " + std::to_string(m_next) +
                  " share no quadrilateral face");
}

long count_member_neighbors(const Graph& host, int v, const Bag& bag) {
    long c = 0;
    for (int m : bag.members) c += host.has_edge(v, m) ? 1 : 0;
    return c;
}

}  // namespace

QuadResult build_quadrangulation(const std::vector<std::vector<int>>& parts,
                                 const SpanningTree& tree, bool waive_size_check) {
    const int r = static_cast<int>(parts.size());
    if (r < 2) throw InputError("need at least two parts");
    if (tree.order() != r) throw InputError("tree order must equal the part count");
    if (static_cast<int>(tree.edges.size()) != r - 1)
        throw NotATree("expected " + std::to_string(r - 1) + " tree edges");

    long n = 0;
    size_t min_size = parts[0].size(), max_size = parts[0].size();
    for (const auto& p : parts) {
        if (p.empty()) throw EmptyPart("empty part");
        if (p.size() < 2) throw InputError("every part needs at least two vertices");
        min_size = std::min(min_size, p.size());
        max_size = std::max(max_size, p.size());
        n += static_cast<long>(p.size());
    }
    if (max_size > 2 * min_size) throw Unbalanced("part sizes differ by more than a factor of 2");
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (const auto& p : parts)
            for (int v : p) {
                if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
                    throw BadPartition("parts must partition 0..n-1");
                seen[static_cast<size_t>(v)] = 1;
            }
    }
    if (!waive_size_check) {
        const long need = 16L * r * 16L * r * 16L * r;
        if (n < need)
            throw PreconditionViolated("n = " + std::to_string(n) + " below (16r)^3 = " +
                                       std::to_string(need) + "; waive to proceed");
    }

    // floor of 4 keeps tiny (waived) instances solvent: a full fan of p
    // vertices supplies floor(p/2) host pairs and consumes one
    const int cap = static_cast<int>(std::max(icbrt(n), 4L));

    ChunkPlan plan;
    plan.cap = cap;
    plan.chunks.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto& p = parts[static_cast<size_t>(i)];
        const int sz = static_cast<int>(p.size());
        const int count = (sz + cap - 1) / cap;
        const int base = sz / count, rem = sz % count;
        int at = 0;
        for (int j = 0; j < count; ++j) {
            const int len = base + (j < rem ? 1 : 0);
            plan.chunks[static_cast<size_t>(i)].emplace_back(p.begin() + at, p.begin() + at + len);
            at += len;
        }
    }

    // BFS order over the part tree from part 0; the root draws its host
    // pairs from its first child, every other part from its parent.
    auto tadj = tree.adjacency();
    std::vector<int> bfs_order, supplier(static_cast<size_t>(r), -1);
    {
        std::vector<char> seen(static_cast<size_t>(r), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            bfs_order.push_back(v);
            for (int w : tadj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    supplier[static_cast<size_t>(w)] = v;
                    q.push(w);
                }
        }
        if (static_cast<int>(bfs_order.size()) != r) throw NotATree("part tree is disconnected");
    }
    const int root = 0, first_child = bfs_order[1];
    supplier[static_cast<size_t>(root)] = first_child;

    struct FanRec {
        int part;
        int u, u2;
        std::vector<int> fan;
        int consumed = 0;  // host pairs taken from this fan, always a prefix
    };
    std::vector<FanRec> recs;
    std::vector<std::vector<int>> rot(static_cast<size_t>(n));
    // pool[i]: faces [anchor, m, anchor', m'] whose degree-2 corners m, m'
    // (positions 1 and 3) lie in part i, with the owning fan's index
    std::vector<std::deque<std::pair<std::array<int, 4>, int>>> pool(static_cast<size_t>(r));

    auto publish_pairs = [&](int part, int rec_id) {
        const auto& rec = recs[static_cast<size_t>(rec_id)];
        for (size_t i = 0; i + 1 < rec.fan.size(); i += 2)
            pool[static_cast<size_t>(part)].push_back(
                {{rec.u, rec.fan[i], rec.u2, rec.fan[i + 1]}, rec_id});
    };

    // Seed: K_{2,q} between the first two root vertices and the first chunk
    // of the first child.
    const auto& root_chunk = plan.chunks[static_cast<size_t>(root)][0];
    const int x1 = root_chunk[0], x2 = root_chunk[1];
    const auto& seed_fan = plan.chunks[static_cast<size_t>(first_child)][0];
    rot[static_cast<size_t>(x1)].assign(seed_fan.rbegin(), seed_fan.rend());
    rot[static_cast<size_t>(x2)] = seed_fan;
    for (int m : seed_fan) rot[static_cast<size_t>(m)] = {x1, x2};
    recs.push_back({first_child, x1, x2, seed_fan, 0});
    publish_pairs(first_child, 0);

    std::vector<std::deque<std::vector<int>>> pending(static_cast<size_t>(r));
    long remaining = 0;
    for (int i = 0; i < r; ++i) {
        const auto& chunks = plan.chunks[static_cast<size_t>(i)];
        size_t from = 0;
        if (i == root) {
            // the two seed anchors are already placed; the rest of the first
            // chunk becomes an ordinary fan
            if (root_chunk.size() > 2)
                pending[static_cast<size_t>(i)].emplace_back(root_chunk.begin() + 2,
                                                             root_chunk.end());
            from = 1;
        } else if (i == first_child) {
            from = 1;
        }
        for (size_t j = from; j < chunks.size(); ++j)
            pending[static_cast<size_t>(i)].push_back(chunks[j]);
        remaining += static_cast<long>(pending[static_cast<size_t>(i)].size());
    }

    while (remaining > 0) {
        bool progressed = false;
        for (int part : bfs_order) {
            if (pending[static_cast<size_t>(part)].empty()) continue;
            auto& supply = pool[static_cast<size_t>(supplier[static_cast<size_t>(part)])];
            if (supply.empty()) continue;
            auto [walk, src] = supply.front();
            supply.pop_front();
            ++recs[static_cast<size_t>(src)].consumed;
            std::vector<int> fan = std::move(pending[static_cast<size_t>(part)].front());
            pending[static_cast<size_t>(part)].pop_front();
            // rotate the face walk so the degree-2 pair sits at the corners
            const int u = walk[1], a = walk[2], u2 = walk[3], b = walk[0];
            insert_fan(rot, u, a, u2, b, fan);
            recs.push_back({part, u, u2, std::move(fan), 0});
            publish_pairs(part, static_cast<int>(recs.size()) - 1);
            progressed = true;
            --remaining;
        }
        if (!progressed)
            throw OutOfHostPairs("no degree-2 host pair available for any pending chunk (" +
                                 std::to_string(remaining) + " chunks left)");
    }

    QuadResult out;
    out.chunk_plan = std::move(plan);
    Graph g(static_cast<int>(n));
    for (int v = 0; v < n; ++v)
        for (int w : rot[static_cast<size_t>(v)])
            if (v < w) g.add_edge(v, w);
    out.plane.g = std::move(g);
    out.plane.rs.order = std::move(rot);
    if (!out.plane.rs.consistent_with(out.plane.g))
        throw Error("internal: rotation system inconsistent with its graph");
    if (classify(out.plane.g, out.plane.rs) != FaceClass::Quadrangulation ||
        out.plane.g.e() != 2 * n - 4)
        throw Error("internal: construction is not a 2n-4 quadrangulation");

    long covered = 0;
    for (const auto& rec : recs) {
        const long ord = static_cast<long>(rec.fan.size()) - 2L * rec.consumed;
        if (ord <= 0) continue;
        if (8 * ord * ord * ord < n) continue;  // small bag, excluded
        Bag bag;
        bag.x1 = rec.u;
        bag.x2 = rec.u2;
        bag.members.assign(rec.fan.begin() + 2L * rec.consumed, rec.fan.end());
        covered += ord;
        out.bags.push_back(std::move(bag));
    }
    out.uncovered_count = n - covered;
    return out;
}

QuadResult build_quadrangulation(const Graph& blowup, const std::vector<std::vector<int>>& parts,
                                 const SpanningTree& tree, bool waive_size_check) {
    if (blowup.n() != 0) {
        std::vector<int> label(static_cast<size_t>(blowup.n()), -1);
        for (int i = 0; i < static_cast<int>(parts.size()); ++i)
            for (int v : parts[static_cast<size_t>(i)]) {
                if (v < 0 || v >= blowup.n()) throw BadPartition("part vertex outside graph");
                label[static_cast<size_t>(v)] = i;
            }
        for (auto [i, j] : tree.edges) {
            const auto& pj = parts[static_cast<size_t>(j)];
            for (int v : parts[static_cast<size_t>(i)]) {
                long cnt = 0;
                for (int w : blowup.neighbors(v)) cnt += label[static_cast<size_t>(w)] == j;
                if (cnt != static_cast<long>(pj.size()))
                    throw InputError("blow-up is not complete bipartite along tree edge " +
                                     std::to_string(i) + "-" + std::to_string(j));
            }
        }
    }
    return build_quadrangulation(parts, tree, waive_size_check);
}

void verify_bag(const PlaneGraph& host, const Bag& bag) {
    const int n = host.g.n();
    if (bag.x1 < 0 || bag.x1 >= n || bag.x2 < 0 || bag.x2 >= n || bag.x1 == bag.x2)
        throw NotABag("invalid anchors");
    if (bag.members.empty()) throw NotABag("bag has no members");
    std::set<int> seen;
    for (int m : bag.members) {
        if (m < 0 || m >= n || m == bag.x1 || m == bag.x2 || !seen.insert(m).second)
            throw NotABag("member list invalid");
        const auto& rm = host.rs.order[static_cast<size_t>(m)];
        const bool ok = rm.size() == 2 && ((rm[0] == bag.x1 && rm[1] == bag.x2) ||
                                           (rm[0] == bag.x2 && rm[1] == bag.x1));
        if (!ok)
            throw NotABag("member " + std::to_string(m) +
                          " is not a degree-2 vertex on exactly the anchors");
    }
    for (size_t j = 0; j + 1 < bag.members.size(); ++j)
        member_pair_face(host.rs, bag.members[j], bag.members[j + 1]);  // throws if absent
}

std::vector<std::string> quad_invariant_violations(const QuadResult& q) {
    std::vector<std::string> bad;
    const long n = q.plane.g.n();
    if (!q.plane.rs.consistent_with(q.plane.g)) {
        bad.push_back("rotation system inconsistent with graph");
        return bad;
    }
    try {
        if (classify(q.plane.g, q.plane.rs) != FaceClass::Quadrangulation)
            bad.push_back("faces are not all quadrilaterals");
    } catch (const Error& e) {
        bad.push_back(std::string("face tracing failed: ") + e.what());
    }
    if (q.plane.g.e() != 2 * n - 4)
        bad.push_back("edge count " + std::to_string(q.plane.g.e()) + " != 2n-4");
    long ccap = icbrt(n);
    if (ccap * ccap * ccap < n) ++ccap;  // ceil(n^{1/3})
    for (int v = 0; v < n; ++v)
        if (q.plane.g.degree(v) > ccap + 2) {
            bad.push_back("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(q.plane.g.degree(v)) + " > ceil(n^{1/3}) + 2");
            break;
        }
    std::set<int> used;
    long covered = 0;
    for (const auto& b : q.bags) {
        try {
            verify_bag(q.plane, b);
        } catch (const NotABag& e) {
            bad.push_back(std::string("bag invariant: ") + e.what());
            continue;
        }
        for (int m : b.members)
            if (!used.insert(m).second) {
                bad.push_back("bags are not disjoint at vertex " + std::to_string(m));
                break;
            }
        const long ord = b.order();
        if (8 * ord * ord * ord < n || ord * ord * ord > n)
            bad.push_back("bag order " + std::to_string(ord) +
                          " outside [n^{1/3}/2, n^{1/3}]");
        covered += ord;
    }
    if (q.uncovered_count != n - covered)
        bad.push_back("uncovered_count inconsistent with bag coverage");
    const long u = q.uncovered_count;
    if (u * u * u > 729 * n * n)
        bad.push_back("uncovered count " + std::to_string(u) + " exceeds 9 n^{2/3}");
    return bad;
}

namespace {

// Replace the contiguous run of `old_members` inside rot[anchor] with
// `new_members`, oriented the same way the old run was.
void rewrite_run(std::vector<int>& rot, const std::vector<int>& old_members,
                 const std::vector<int>& new_members) {
    const size_t sz = rot.size(), len = old_members.size();
    // locate the run start: position holding old_members.front() (forward) or
    // old_members.back() (reversed)
    for (size_t s = 0; s < sz; ++s) {
        bool fwd = true, rev = true;
        for (size_t j = 0; j < len && (fwd || rev); ++j) {
            int at = rot[(s + j) % sz];
            fwd = fwd && at == old_members[j];
            rev = rev && at == old_members[len - 1 - j];
        }
        if (!fwd && !rev) continue;
        for (size_t j = 0; j < len; ++j)
            rot[(s + j) % sz] = fwd ? new_members[j] : new_members[len - 1 - j];
        return;
    }
    throw NotABag("bag members are not contiguous in an anchor rotation");
}

}  // namespace

void reorder_bag(QuadResult& q, int bag_index, const std::vector<int>& new_order) {
    if (bag_index < 0 || bag_index >= static_cast<int>(q.bags.size()))
        throw OutOfRange("bag index out of range");
    Bag& bag = q.bags[static_cast<size_t>(bag_index)];
    verify_bag(q.plane, bag);
    if (new_order.size() != bag.members.size())
        throw BadPermutation("permutation size mismatch");
    {
        std::set<int> a(bag.members.begin(), bag.members.end());
        std::set<int> b(new_order.begin(), new_order.end());
        if (a != b) throw BadPermutation("not a permutation of the bag members");
    }
    if (new_order == bag.members) return;
    rewrite_run(q.plane.rs.order[static_cast<size_t>(bag.x1)], bag.members, new_order);
    rewrite_run(q.plane.rs.order[static_cast<size_t>(bag.x2)], bag.members, new_order);
    bag.members = new_order;
}

InsertionPlan plan_insertions(const std::vector<Bag>& bags, const std::vector<int>& L,
                              const Graph& host, int k, long n_param,
                              const InsertionOptions& opts) {
    if (k < 1) throw OutOfRange("k must be at least 1");
    if (n_param < 1) throw OutOfRange("n must be positive");
    std::set<int> quad_verts;
    for (const auto& b : bags) {
        quad_verts.insert(b.x1);
        quad_verts.insert(b.x2);
        for (int m : b.members)
            if (!quad_verts.insert(m).second)
                throw Overlap("bags share member vertex " + std::to_string(m));
    }
    std::set<int> lset;
    for (int v : L) {
        if (v < 0 || v >= host.n()) throw InputError("leftover vertex outside host");
        if (!lset.insert(v).second) throw InputError("duplicate leftover vertex");
        if (quad_verts.count(v))
            throw Overlap("leftover " + std::to_string(v) + " already lies in a quadrangulation");
    }

    InsertionPlan plan;
    plan.leftovers = L;
    plan.relaxed = opts.relaxed;
    const double root = std::cbrt(static_cast<double>(n_param));
    plan.good_threshold =
        static_cast<int>(std::ceil(root / (32.0 * k * k) - 1e-9));
    plan.capacity = static_cast<int>(std::floor(root / (128.0 * k * k) + 1e-9));
    plan.assignment.assign(bags.size(), {});

    std::vector<char> assigned(L.size(), 0);
    size_t left = L.size();
    for (size_t i = 0; i < bags.size() && left > 0; ++i) {
        const Bag& b = bags[i];
        auto& li = plan.assignment[i];
        const long bag_cap =
            opts.relaxed ? std::max<long>(1, b.order() / 4) : plan.capacity;
        long min_assigned_nbrs = -1;  // over vertices already in L_i (relaxed mode)
        for (size_t j = 0; j < L.size(); ++j) {
            if (assigned[j]) continue;
            if (static_cast<long>(li.size()) >= bag_cap) break;
            const long nbrs = count_member_neighbors(host, L[j], b);
            bool good;
            if (opts.relaxed) {
                // keep every assigned vertex at >= 2 |L_i| member neighbours
                const long t = static_cast<long>(li.size()) + 1;
                good = nbrs >= 2 * t && (min_assigned_nbrs < 0 || min_assigned_nbrs >= 2 * t);
            } else {
                good = nbrs >= plan.good_threshold;
            }
            if (!good) continue;
            li.push_back(L[j]);
            assigned[j] = 1;
            --left;
            if (min_assigned_nbrs < 0 || nbrs < min_assigned_nbrs) min_assigned_nbrs = nbrs;
        }
    }
    if (left > 0) {
        size_t j = 0;
        while (assigned[j]) ++j;
        int goods = 0;
        for (const auto& b : bags) {
            const long nbrs = count_member_neighbors(host, L[j], b);
            goods += (opts.relaxed ? nbrs >= 2 : nbrs >= plan.good_threshold) ? 1 : 0;
        }
        throw UnassignableVertex("leftover vertex " + std::to_string(L[j]) +
                                     " fits no bag (" + std::to_string(goods) +
                                     " bags meet its neighbour threshold)",
                                 L[j], goods);
    }
    return plan;
}

void execute_insertions(std::vector<QuadResult>& qs, const InsertionPlan& plan,
                        const Graph& host) {
    // map flat bag indices to (component, local bag)
    std::vector<std::pair<size_t, size_t>> where;
    for (size_t c = 0; c < qs.size(); ++c)
        for (size_t b = 0; b < qs[c].bags.size(); ++b) where.emplace_back(c, b);
    if (plan.assignment.size() != where.size())
        throw InputError("plan does not match the bag list of these components");

    // grow planes so inserted host vertices fit
    int need = 0;
    for (const auto& li : plan.assignment)
        for (int v : li) need = std::max(need, v + 1);
    for (auto& q : qs) {
        if (q.plane.g.n() >= need) continue;
        Graph g(need);
        for (auto [u, v] : q.plane.g.edges()) g.add_edge(u, v);
        q.plane.g = std::move(g);
        q.plane.rs.order.resize(static_cast<size_t>(need));
    }

    for (size_t i = 0; i < plan.assignment.size(); ++i) {
        const auto& li = plan.assignment[i];
        if (li.empty()) continue;
        auto [ci, bi] = where[i];
        QuadResult& q = qs[ci];
        const long t = static_cast<long>(li.size());
        const std::vector<int> members = q.bags[bi].members;  // copy: reorder mutates

        // pair the j-th assigned vertex with two of its unused member
        // neighbours; >= 2|L_i| member neighbours each guarantees success
        std::vector<char> used(members.size(), 0);
        std::vector<int> new_order;
        for (int v : li) {
            int got = 0;
            for (size_t m = 0; m < members.size() && got < 2; ++m) {
                if (used[m] || !host.has_edge(v, members[m])) continue;
                used[m] = 1;
                new_order.push_back(members[m]);
                ++got;
            }
            if (got < 2)
                throw PairingImpossible("vertex " + std::to_string(v) +
                                        " lacks two free member neighbours in its bag");
        }
        for (size_t m = 0; m < members.size(); ++m)
            if (!used[m]) new_order.push_back(members[m]);
        reorder_bag(q, static_cast<int>(bi), new_order);

        for (long j = 0; j < t; ++j) {
            const int v = li[static_cast<size_t>(j)];
            const int ma = new_order[static_cast<size_t>(2 * j)];
            const int mb = new_order[static_cast<size_t>(2 * j + 1)];
            auto walk = member_pair_face(q.plane.rs, ma, mb);
            insert_fan(q.plane.rs.order, walk[0], walk[1], walk[2], walk[3], {v});
            q.plane.g.add_edge(v, ma);
            q.plane.g.add_edge(v, mb);
            q.bags.push_back(Bag{ma, mb, {v}});
        }
        // the paired members now carry degree 3; retire them from the bag
        auto& bag = q.bags[bi];
        bag.members.assign(new_order.begin() + 2 * t, new_order.end());
        q.uncovered_count += 2 * t;
    }
    for (auto& q : qs)
        q.bags.erase(std::remove_if(q.bags.begin(), q.bags.end(),
                                    [](const Bag& b) { return b.members.empty(); }),
                     q.bags.end());
}

QuadResult remap_quad(const QuadResult& q, const std::vector<int>& image, int new_n) {
    const int n = q.plane.g.n();
    if (static_cast<int>(image.size()) != n) throw InputError("image size mismatch");
    std::vector<char> taken(static_cast<size_t>(new_n), 0);
    for (int v = 0; v < n; ++v) {
        int w = image[static_cast<size_t>(v)];
        if (w < 0 || w >= new_n || taken[static_cast<size_t>(w)])
            throw InputError("image is not injective into 0..new_n-1");
        taken[static_cast<size_t>(w)] = 1;
    }
    QuadResult out;
    Graph g(new_n);
    for (auto [u, v] : q.plane.g.edges())
        g.add_edge(image[static_cast<size_t>(u)], image[static_cast<size_t>(v)]);
    out.plane.g = std::move(g);
    out.plane.rs.order.resize(static_cast<size_t>(new_n));
    for (int v = 0; v < n; ++v) {
        auto& dst = out.plane.rs.order[static_cast<size_t>(image[static_cast<size_t>(v)])];
        for (int w : q.plane.rs.order[static_cast<size_t>(v)])
            dst.push_back(image[static_cast<size_t>(w)]);
    }
    out.bags = q.bags;
    for (auto& b : out.bags) {
        b.x1 = image[static_cast<size_t>(b.x1)];
        b.x2 = image[static_cast<size_t>(b.x2)];
        for (int& m : b.members) m = image[static_cast<size_t>(m)];
    }
    out.chunk_plan = q.chunk_plan;
    for (auto& part : out.chunk_plan.chunks)
        for (auto& chunk : part)
            for (int& v : chunk) v = image[static_cast<size_t>(v)];
    out.uncovered_count = q.uncovered_count;
    return out;
}

}  // namespace plsub
