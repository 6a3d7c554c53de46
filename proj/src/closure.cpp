#include "ham/closure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace ham {

ClosureResult augment(const Graph& g, const EdgeFilter& filter)
{
    int n = g.vertex_count();
    ClosureResult res{g, {}};
    Graph& gc = res.closed;

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = gc.degree(v);

    std::deque<int> queue;
    std::vector<char> in_queue(n, 1);
    for (int v = 0; v < n; ++v)
        queue.push_back(v);

    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        in_queue[u] = 0;

        int deg_at_entry = deg[u];
        VertexSet cand = filter.partners(u, n);
        cand.andnot_with(gc.neighbors(u));
        if (cand.test(u))
            cand.reset(u);
        for (int v : cand) {
            if (gc.has_edge(u, v))
                continue; // added during this very scan
            if (deg[u] + deg[v] >= n) {
                gc.add_edge(u, v);
                ++deg[u];
                ++deg[v];
                res.log.emplace_back(std::min(u, v), std::max(u, v));
                if (!in_queue[v]) {
                    in_queue[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        // u's own degree grew during the scan: earlier-skipped partners may
        // qualify now
        if (deg[u] != deg_at_entry && !in_queue[u]) {
            in_queue[u] = 1;
            queue.push_back(u);
        }
    }
    return res;
}

namespace {

// One Bondy-Chvatal undo step. `cur` is the graph in which the cycle must be
// valid after the step (it already excludes edge uv).
void resplice(const Graph& cur, HamCycle& cycle, int iu, int v)
{
    int n = static_cast<int>(cycle.size());
    // cut the cycle at edge uv: path p1..pn with p1=u, pn=v
    std::vector<int> path(n);
    if (cycle[(iu + 1) % n] == v) {
        // walk backwards from u so the path still ends at v
        for (int i = 0; i < n; ++i)
            path[i] = cycle[(iu - i + n) % n];
    } else {
        for (int i = 0; i < n; ++i)
            path[i] = cycle[(iu + i) % n];
    }
    assert(path[0] == cycle[iu] && path[n - 1] == v);

    // d(u) + d(v) >= n held when uv was added, so some index i admits the
    // rotation: edges {p_i, p_n} and {p_{i+1}, p_1} both present
    int split = -1;
    for (int i = 1; i + 1 < n; ++i) {
        if (cur.has_edge(path[i], path[n - 1]) && cur.has_edge(path[i + 1], path[0])) {
            split = i;
            break;
        }
    }
    if (split < 0)
        throw ContractViolation("lift_cycle: rotation index not found; "
                                "cycle invalid for this log");

    // p1..p_i, then p_n down to p_{i+1}
    HamCycle next;
    next.reserve(n);
    for (int i = 0; i <= split; ++i)
        next.push_back(path[i]);
    for (int i = n - 1; i > split; --i)
        next.push_back(path[i]);
    cycle = std::move(next);
}

} // namespace

HamCycle lift_cycle(const Graph& original, const AugmentationLog& log,
                    HamCycle cycle)
{
    int n = original.vertex_count();
    Graph cur = original;
    for (auto [u, v] : log) {
        if (cur.has_edge(u, v))
            throw ContractViolation("lift_cycle: log entry duplicates an edge");
        cur.add_edge(u, v);
    }
    if (!is_hamiltonian_cycle(cur, cycle))
        throw ContractViolation("lift_cycle: cycle invalid in closed graph");

    // positions are refreshed only after a splice, keeping the common
    // not-on-cycle case O(1) per log entry
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[cycle[i]] = i;
    auto on_cycle = [&](int u, int v) {
        int d = std::abs(pos[u] - pos[v]);
        return d == 1 || d == n - 1;
    };

    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        auto [u, v] = *it;
        cur.remove_edge(u, v);
        if (on_cycle(u, v)) {
            resplice(cur, cycle, pos[u], v);
            for (int i = 0; i < n; ++i)
                pos[cycle[i]] = i;
        }
    }
    assert(cur == original);
    assert(is_hamiltonian_cycle(original, cycle));
    return cycle;
}

HamCycle complete_closure_cycle(const Graph& g)
{
    int n = g.vertex_count();
    if (n < 3)
        throw ContractViolation("complete_closure_cycle: n < 3");
    ClosureResult cl = augment(g, EdgeFilter::all_pairs());
    for (int v = 0; v < n; ++v)
        if (cl.closed.degree(v) != n - 1)
            throw ContractViolation("closure did not reach the complete graph");
    HamCycle trivial(n);
    for (int v = 0; v < n; ++v)
        trivial[v] = v;
    return lift_cycle(g, cl.log, std::move(trivial));
}

} // namespace ham
