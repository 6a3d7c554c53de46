#include "ham/extend.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "ham/connectivity.hpp"

namespace ham {

CycleState CycleState::from_order(const Graph& g, std::vector<int> order)
{
    CycleState s;
    s.order = std::move(order);
    s.on_cycle = Bitset(g.vertex_count());
    for (int v : s.order)
        s.on_cycle.set(v);
    s.validate(g);
    return s;
}

void CycleState::validate(const Graph& g) const
{
    int k = static_cast<int>(order.size());
    if (k < 3)
        throw ContractViolation("cycle state: fewer than 3 vertices");
    if (on_cycle.count() != k)
        throw ContractViolation("cycle state: repeated vertex");
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(order[i], order[(i + 1) % k]))
            throw ContractViolation("cycle state: missing edge");
}

namespace {

// Short cycle through a BFS tree from vertex 0: the non-tree edge whose
// fundamental cycle is shortest (first found wins ties).
CycleState initial_cycle(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> parent(n, -1), depth(n, -1), bfs_order;
    bfs_order.reserve(n);
    std::deque<int> queue{0};
    depth[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        bfs_order.push_back(v);
        for (int u : g.neighbors(v))
            if (depth[u] < 0) {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
    }

    auto lca = [&](int a, int b) {
        while (depth[a] > depth[b])
            a = parent[a];
        while (depth[b] > depth[a])
            b = parent[b];
        while (a != b) {
            a = parent[a];
            b = parent[b];
        }
        return a;
    };

    int best_len = -1, best_u = -1, best_v = -1;
    for (int u : bfs_order) {
        for (int v : g.neighbors(u)) {
            if (v < u || parent[v] == u || parent[u] == v)
                continue;
            int len = depth[u] + depth[v] - 2 * depth[lca(u, v)] + 1;
            if (best_len < 0 || len < best_len) {
                best_len = len;
                best_u = u;
                best_v = v;
            }
        }
    }
    if (best_u < 0)
        throw ContractViolation("no cycle found (graph not 2-connected?)");

    int l = lca(best_u, best_v);
    std::vector<int> left, right;
    for (int a = best_u; a != l; a = parent[a])
        left.push_back(a);
    left.push_back(l);
    for (int b = best_v; b != l; b = parent[b])
        right.push_back(b);
    left.insert(left.end(), right.rbegin(), right.rend());
    return CycleState::from_order(g, std::move(left));
}

// ---------- case A: outside of the cycle is independent ----------

StepResult step_outside_independent(const Graph& g, CycleState& state, int v)
{
    const std::vector<int>& ord = state.order;
    int k = static_cast<int>(ord.size());

    // two consecutive cycle vertices both adjacent to v: splice v in
    for (int i = 0; i < k; ++i) {
        if (g.has_edge(v, ord[i]) && g.has_edge(v, ord[(i + 1) % k])) {
            std::vector<int> next;
            next.reserve(k + 1);
            next.insert(next.end(), ord.begin(), ord.begin() + i + 1);
            next.push_back(v);
            next.insert(next.end(), ord.begin() + i + 1, ord.end());
            state = CycleState::from_order(g, std::move(next));
            return Extended{};
        }
    }

    // successors (along the orientation) of v's neighbors
    std::vector<int> nplus;
    for (int i = 0; i < k; ++i)
        if (g.has_edge(v, ord[i]))
            nplus.push_back((i + 1) % k);
    std::sort(nplus.begin(), nplus.end());

    // an edge between two successors lets the cycle absorb v
    for (size_t ai = 0; ai < nplus.size(); ++ai) {
        for (size_t bi = ai + 1; bi < nplus.size(); ++bi) {
            int a = nplus[ai], b = nplus[bi];
            if (!g.has_edge(ord[a], ord[b]))
                continue;
            std::vector<int> next;
            next.reserve(k + 1);
            if (a >= 1) {
                // x_1..x_{a-1}, v, x_{b-1}..x_a reversed, x_b..x_k
                next.insert(next.end(), ord.begin(), ord.begin() + a);
                next.push_back(v);
                for (int i = b - 1; i >= a; --i)
                    next.push_back(ord[i]);
                next.insert(next.end(), ord.begin() + b, ord.end());
            } else {
                // a == 0: predecessor of position 0 is x_k
                // x_1..x_{b-1}, v, x_k..x_b reversed; closes over edge x_b x_1
                next.insert(next.end(), ord.begin(), ord.begin() + b);
                next.push_back(v);
                for (int i = k - 1; i >= b; --i)
                    next.push_back(ord[i]);
            }
            state = CycleState::from_order(g, std::move(next));
            return Extended{};
        }
    }

    // no extension: successors plus v form the independent set
    VertexSet set(g.vertex_count());
    set.set(v);
    for (int p : nplus)
        set.set(ord[p]);
    return IndepSetFound{std::move(set)};
}

// ---------- case B: escape path and the three-inequality analysis ----------

struct Rotated {
    const Graph* g;
    std::vector<int> ord; // cycle rotated so the escape path leaves ord[0]
    std::vector<int> path; // x_1, p_1, .., p_m, x_{t+1}
    int t;
    int k;
    int m;

    int x(int i) const { return ord[i - 1]; } // 1-based, x_1..x_k
    int p(int j) const { return path[j]; }    // p_1..p_m
    bool adj(int a, int b) const { return g->has_edge(a, b); }
};

// Every splice below produces the new cycle order directly; from_order
// re-validates it, so a wrong pattern cannot slip through silently.

std::vector<int> splice_ineq1(const Rotated& r, int i)
{
    // x_1..x_i, x_t..x_{i+1}, x_k..x_{t+1}, p_m..p_1
    std::vector<int> next;
    next.reserve(r.k + r.m);
    for (int a = 1; a <= i; ++a)
        next.push_back(r.x(a));
    for (int a = r.t; a >= i + 1; --a)
        next.push_back(r.x(a));
    for (int a = r.k; a >= r.t + 1; --a)
        next.push_back(r.x(a));
    for (int j = r.m; j >= 1; --j)
        next.push_back(r.p(j));
    return next;
}

std::vector<int> splice_2a(const Rotated& r, int i)
{
    // x_1..x_t, x_{i+1}..x_k, x_i..x_{t+1}, p_m..p_1
    std::vector<int> next;
    next.reserve(r.k + r.m);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    for (int a = i + 1; a <= r.k; ++a)
        next.push_back(r.x(a));
    for (int a = i; a >= r.t + 1; --a)
        next.push_back(r.x(a));
    for (int j = r.m; j >= 1; --j)
        next.push_back(r.p(j));
    return next;
}

std::vector<int> splice_2b(const Rotated& r, int i)
{
    // x_1..x_t, x_i..x_{t+1}, p_m..p_2, x_{i+1}..x_k  (p_1 drops out)
    std::vector<int> next;
    next.reserve(r.k + r.m - 1);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    for (int a = i; a >= r.t + 1; --a)
        next.push_back(r.x(a));
    for (int j = r.m; j >= 2; --j)
        next.push_back(r.p(j));
    for (int a = i + 1; a <= r.k; ++a)
        next.push_back(r.x(a));
    return next;
}

std::vector<int> splice_2c(const Rotated& r, int i)
{
    // x_1..x_i, x_k..x_{i+2}, p_2, p_1  (x_{i+1} drops out, net +1)
    std::vector<int> next;
    next.reserve(r.k + 1);
    for (int a = 1; a <= i; ++a)
        next.push_back(r.x(a));
    for (int a = r.k; a >= i + 2; --a)
        next.push_back(r.x(a));
    next.push_back(r.p(2));
    next.push_back(r.p(1));
    return next;
}

std::vector<int> splice_2d_xk_xt(const Rotated& r)
{
    // x_1..x_t, x_k..x_{t+1}, p_m..p_1
    std::vector<int> next;
    next.reserve(r.k + r.m);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    for (int a = r.k; a >= r.t + 1; --a)
        next.push_back(r.x(a));
    for (int j = r.m; j >= 1; --j)
        next.push_back(r.p(j));
    return next;
}

std::vector<int> splice_2d_p2_xk(const Rotated& r)
{
    // x_1, p_1, p_2, x_k..x_2
    std::vector<int> next;
    next.reserve(r.k + 2);
    next.push_back(r.x(1));
    next.push_back(r.p(1));
    next.push_back(r.p(2));
    for (int a = r.k; a >= 2; --a)
        next.push_back(r.x(a));
    return next;
}

std::vector<int> splice_3a_xt(const Rotated& r, int j)
{
    // x_1..x_t, p_j..p_m, x_{t+1}..x_k
    std::vector<int> next;
    next.reserve(r.k + r.m);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    for (int jj = j; jj <= r.m; ++jj)
        next.push_back(r.p(jj));
    for (int a = r.t + 1; a <= r.k; ++a)
        next.push_back(r.x(a));
    return next;
}

std::vector<int> splice_3a_xk(const Rotated& r, int j)
{
    // x_1, p_1..p_j, x_k..x_2
    std::vector<int> next;
    next.reserve(r.k + j);
    next.push_back(r.x(1));
    for (int jj = 1; jj <= j; ++jj)
        next.push_back(r.p(jj));
    for (int a = r.k; a >= 2; --a)
        next.push_back(r.x(a));
    return next;
}

std::vector<int> splice_3b_xt_xk(const Rotated& r, int y)
{
    // x_1..x_t, y, x_k..x_{t+1}, p_m..p_1
    std::vector<int> next;
    next.reserve(r.k + r.m + 1);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    next.push_back(y);
    for (int a = r.k; a >= r.t + 1; --a)
        next.push_back(r.x(a));
    for (int j = r.m; j >= 1; --j)
        next.push_back(r.p(j));
    return next;
}

std::vector<int> splice_3b_xt_p2(const Rotated& r, int y)
{
    // x_1..x_t, y, p_2..p_m, x_{t+1}..x_k  (p_1 drops out)
    std::vector<int> next;
    next.reserve(r.k + r.m);
    for (int a = 1; a <= r.t; ++a)
        next.push_back(r.x(a));
    next.push_back(y);
    for (int j = 2; j <= r.m; ++j)
        next.push_back(r.p(j));
    for (int a = r.t + 1; a <= r.k; ++a)
        next.push_back(r.x(a));
    return next;
}

std::vector<int> splice_3b_xk_p2(const Rotated& r, int y)
{
    // x_1, p_1, p_2, y, x_k..x_2
    std::vector<int> next;
    next.reserve(r.k + 3);
    next.push_back(r.x(1));
    next.push_back(r.p(1));
    next.push_back(r.p(2));
    next.push_back(y);
    for (int a = r.k; a >= 2; --a)
        next.push_back(r.x(a));
    return next;
}

StepResult step_extend_via_path(const Graph& g, CycleState& state)
{
    EscapePath ep = find_escape_path(g, state);
    int k = static_cast<int>(state.order.size());

    // rotate the stored orientation so the path leaves x_1
    auto it = std::find(state.order.begin(), state.order.end(), ep.verts.front());
    assert(it != state.order.end());
    std::rotate(state.order.begin(), it, state.order.end());

    Rotated r;
    r.g = &g;
    r.ord = state.order;
    r.path = ep.verts;
    r.t = ep.t;
    r.k = k;

    // keep p_2's neighbors out of x_2..x_t by re-entering earlier: if p_2
    // sees some x_i with 1 < i <= t, shorten the path to (x_1, p_1, p_2, x_i)
    {
        int p2 = r.path[2];
        for (int i = 2; i <= r.t; ++i) {
            if (g.has_edge(p2, r.x(i))) {
                r.path = {r.path[0], r.path[1], r.path[2], r.x(i)};
                r.t = i - 1;
                break;
            }
        }
    }
    r.m = static_cast<int>(r.path.size()) - 2;
    assert(r.m >= 2);

    int xt = r.x(r.t), xk = r.x(r.k), p2 = r.p(2);

    // at least one of the three degree sums must overflow its range, or some
    // vertex would have degree below (n+2)/3
    {
        int n = g.vertex_count();
        Bitset up_set(n), down_set(n);
        for (int a = 1; a <= r.t; ++a)
            up_set.set(r.x(a));
        for (int a = r.t + 1; a <= r.k; ++a)
            down_set.set(r.x(a));
        Bitset out_set = state.on_cycle.complement();
        DegreeTriple d;
        int ids[3] = {xt, xk, p2};
        for (int w = 0; w < 3; ++w) {
            d.up[w] = g.neighbors(ids[w]).intersect_count(up_set);
            d.down[w] = g.neighbors(ids[w]).intersect_count(down_set);
            d.out[w] = g.neighbors(ids[w]).intersect_count(out_set);
            assert(d.up[w] + d.down[w] + d.out[w] == g.degree(ids[w]));
        }
        bool i1 = d.up[0] + d.up[1] + d.up[2] > r.t + 1;
        bool i2 = d.down[0] + d.down[1] + d.down[2] > r.k - r.t + 1;
        bool i3 = d.out[0] + d.out[1] + d.out[2] > n - r.k - 1;
        if (!i1 && !i2 && !i3)
            throw ContractViolation(
                "degree-sum bound failed: some vertex has degree < (n+2)/3");
    }

    auto accept = [&](std::vector<int> next) {
        int before = static_cast<int>(state.order.size());
        state = CycleState::from_order(g, std::move(next));
        if (static_cast<int>(state.order.size()) <= before)
            throw ContractViolation("extension did not grow the cycle");
        return StepResult{Extended{}};
    };

    // inequality (1): some 1 <= i < t with x_t x_i and x_k x_{i+1} edges
    for (int i = 1; i < r.t; ++i)
        if (r.adj(xt, r.x(i)) && r.adj(xk, r.x(i + 1)))
            return accept(splice_ineq1(r, i));

    // inequality (2), cases (a)-(d) over t+1 <= i < k
    for (int i = r.t + 1; i < r.k; ++i)
        if (r.adj(xk, r.x(i)) && r.adj(xt, r.x(i + 1)))
            return accept(splice_2a(r, i));
    for (int i = r.t + 1; i < r.k; ++i)
        if (r.adj(xt, r.x(i)) && r.adj(p2, r.x(i + 1)))
            return accept(splice_2b(r, i));
    for (int i = r.t + 1; i < r.k - 1; ++i)
        if (r.adj(xk, r.x(i)) && r.adj(p2, r.x(i + 2)))
            return accept(splice_2c(r, i));
    if (r.adj(xk, xt))
        return accept(splice_2d_xk_xt(r));
    if (r.adj(p2, xk))
        return accept(splice_2d_p2_xk(r));

    // inequality (3), case (a): a chord from x_t or x_k into the path
    for (int j = 1; j <= r.m; ++j) {
        if (r.adj(xt, r.p(j)))
            return accept(splice_3a_xt(r, j));
        if (r.adj(xk, r.p(j)))
            return accept(splice_3a_xk(r, j));
    }

    // inequality (3), case (b): some outside vertex y sees two of the triple
    {
        Bitset outside = state.on_cycle.complement();
        for (int v : r.path)
            if (!state.on_cycle.test(v))
                outside.reset(v); // path interior is out of bounds for y
        for (int y : outside) {
            bool at = r.adj(xt, y), ak = r.adj(xk, y), ap = r.adj(p2, y);
            if (at + ak + ap < 2)
                continue;
            if (at && ak)
                return accept(splice_3b_xt_xk(r, y));
            if (at && ap)
                return accept(splice_3b_xt_p2(r, y));
            return accept(splice_3b_xk_p2(r, y));
        }
    }

    throw ContractViolation("no extension case fired; preconditions violated");
}

} // namespace

EscapePath find_escape_path(const Graph& g, const CycleState& state)
{
    int n = g.vertex_count();
    const Bitset& on = state.on_cycle;
    Bitset outside = on.complement();

    // lexicographically smallest edge fully outside the cycle
    int ev = -1, ew = -1;
    for (int v : outside) {
        Bitset nb = g.neighbors(v) & outside;
        int w = nb.next(v);
        if (w >= 0) {
            ev = v;
            ew = w;
            break;
        }
    }
    if (ev < 0)
        throw ContractViolation("find_escape_path: outside is independent");

    // a path (u, v, w): u on the cycle, v-w an outside edge. BFS inside the
    // outside part from {ev, ew} until some vertex sees the cycle.
    int u = -1, pv = -1, pw = -1;
    {
        std::vector<int> parent(n, -2);
        std::deque<int> queue;
        parent[ev] = -1;
        parent[ew] = -1;
        queue.push_back(ev);
        queue.push_back(ew);
        while (!queue.empty() && u < 0) {
            int y = queue.front();
            queue.pop_front();
            Bitset cyc_nb = g.neighbors(y) & on;
            int c = cyc_nb.first();
            if (c >= 0) {
                u = c;
                pv = y;
                pw = parent[y] >= 0 ? parent[y] : (y == ev ? ew : ev);
                break;
            }
            Bitset nb = g.neighbors(y) & outside;
            for (int z : nb)
                if (parent[z] == -2) {
                    parent[z] = y;
                    queue.push_back(z);
                }
        }
        if (u < 0)
            throw ContractViolation("find_escape_path: outside edge cut off "
                                    "from the cycle (not connected?)");
    }

    std::vector<int> verts;

    // branch 1: a path from pw to the cycle avoiding {u, pv}
    {
        std::vector<int> parent(n, -2);
        parent[pw] = -1;
        parent[u] = -3;
        parent[pv] = -3;
        std::deque<int> queue{pw};
        int hit = -1, hit_from = -1;
        while (!queue.empty() && hit < 0) {
            int y = queue.front();
            queue.pop_front();
            for (int z : g.neighbors(y)) {
                if (parent[z] != -2)
                    continue;
                if (on.test(z)) {
                    hit = z;
                    hit_from = y;
                    break;
                }
                parent[z] = y;
                queue.push_back(z);
            }
        }
        if (hit >= 0) {
            std::vector<int> tail;
            tail.push_back(hit);
            for (int a = hit_from; a >= 0; a = parent[a])
                tail.push_back(a);
            // tail is x..pw reversed
            verts.push_back(u);
            verts.push_back(pv);
            verts.insert(verts.end(), tail.rbegin(), tail.rend());
        }
    }

    // branch 2: paths R (pv to the cycle avoiding u) and Q (u to pw avoiding
    // the cycle, R, and pv), glued as u -Q- pw, pw-pv, pv -R- x
    if (verts.empty()) {
        std::vector<int> r_path; // pv .. x
        {
            std::vector<int> parent(n, -2);
            parent[pv] = -1;
            parent[u] = -3;
            std::deque<int> queue{pv};
            int hit = -1, hit_from = -1;
            while (!queue.empty() && hit < 0) {
                int y = queue.front();
                queue.pop_front();
                for (int z : g.neighbors(y)) {
                    if (parent[z] != -2)
                        continue;
                    if (on.test(z)) {
                        hit = z;
                        hit_from = y;
                        break;
                    }
                    parent[z] = y;
                    queue.push_back(z);
                }
            }
            if (hit < 0)
                throw ContractViolation(
                    "find_escape_path: deleting one vertex disconnects the "
                    "graph (2-connectivity violated)");
            std::vector<int> tail{hit};
            for (int a = hit_from; a >= 0; a = parent[a])
                tail.push_back(a);
            r_path.assign(tail.rbegin(), tail.rend());
        }
        for (int a : r_path)
            if (a == pw)
                throw ContractViolation("find_escape_path: R passes through w "
                                        "although branch 1 failed");

        std::vector<int> q_path; // u .. pw
        {
            Bitset blocked = on;
            for (int a : r_path)
                blocked.set(a);
            blocked.set(pv);
            blocked.reset(u); // source may be on the cycle
            std::vector<int> parent(n, -2);
            parent[u] = -1;
            std::deque<int> queue{u};
            bool found = false;
            while (!queue.empty() && !found) {
                int y = queue.front();
                queue.pop_front();
                for (int z : g.neighbors(y)) {
                    if (parent[z] != -2)
                        continue;
                    if (z == pw) {
                        parent[z] = y;
                        found = true;
                        break;
                    }
                    if (blocked.test(z))
                        continue;
                    parent[z] = y;
                    queue.push_back(z);
                }
            }
            if (!found)
                throw ContractViolation(
                    "find_escape_path: no u-w path clear of C, R and v "
                    "(2-connectivity violated)");
            for (int a = pw; a >= 0; a = parent[a])
                q_path.push_back(a);
            std::reverse(q_path.begin(), q_path.end());
        }

        verts = q_path;                                  // u .. pw
        verts.insert(verts.end(), r_path.begin(), r_path.end()); // pv .. x
    }

    // re-entry index along the stored orientation
    int k = static_cast<int>(state.order.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < k; ++i)
        pos[state.order[i]] = i;
    EscapePath ep;
    ep.verts = std::move(verts);
    ep.t = (pos[ep.verts.back()] - pos[ep.verts.front()] + k) % k;
    assert(ep.t >= 1 && ep.t < k);
    assert(ep.verts.size() >= 4);
    return ep;
}

StepResult extend_step(const Graph& g, CycleState& state)
{
    int n = g.vertex_count();
    if (static_cast<int>(state.order.size()) == n)
        return CycleComplete{};

    Bitset outside = state.on_cycle.complement();
    bool independent = true;
    for (int v : outside)
        if (g.neighbors(v).intersects(outside)) {
            independent = false;
            break;
        }

    if (independent)
        return step_outside_independent(g, state, outside.first());
    return step_extend_via_path(g, state);
}

std::variant<HamCycle, VertexSet> find_cycle_or_indepset(const Graph& g)
{
    int n = g.vertex_count();
    if (n < 3)
        throw std::invalid_argument("find_cycle_or_indepset: n < 3");
    int delta = g.min_degree();
    if (3 * delta < n + 2)
        throw std::invalid_argument(
            "find_cycle_or_indepset: minimum degree below (n+2)/3");
    if (!is_two_connected(g))
        throw std::invalid_argument("find_cycle_or_indepset: not 2-connected");

    CycleState state = initial_cycle(g);
    for (int step = 0; step <= n; ++step) {
        StepResult res = extend_step(g, state);
        if (std::holds_alternative<CycleComplete>(res)) {
            state.validate(g);
            return state.order;
        }
        if (auto* found = std::get_if<IndepSetFound>(&res)) {
            // trim to exactly delta+1 (lowest ids); any subset stays independent
            VertexSet trimmed(n);
            int taken = 0;
            for (int v : found->set) {
                if (taken == delta + 1)
                    break;
                trimmed.set(v);
                ++taken;
            }
            if (taken != delta + 1 || !is_independent_set(g, trimmed))
                throw ContractViolation("independent set output invalid");
            return trimmed;
        }
    }
    throw ContractViolation("cycle extension failed to terminate");
}

} // namespace ham
