#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ham/connectivity.hpp"
#include "ham/graph.hpp"
#include "ham/rng.hpp"

namespace ham::testutil {

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

// sides {0..a-1} and {a..a+b-1}
inline Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// center is vertex 0
inline Graph star(int leaves)
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

// hub n-1 joined to every vertex of the rim cycle 0..n-2
inline Graph wheel(int n)
{
    Graph g(n);
    for (int v = 0; v < n - 1; ++v) {
        g.add_edge(v, (v + 1) % (n - 1));
        g.add_edge(v, n - 1);
    }
    return g;
}

inline Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer cycle
        g.add_edge(i, i + 5);           // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
    }
    return g;
}

inline Graph random_graph(int n, double p, uint64_t seed)
{
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_coin(rng, p))
                g.add_edge(u, v);
    return g;
}

// ---- independent oracles (test-only, kept away from the library path) ----

// Minimum path cover of G[targets] by enumerating vertex orders and cut
// points. Exponential; callers keep |targets| tiny.
inline int min_path_cover_by_enumeration(const Graph& g,
                                         const std::vector<int>& targets)
{
    int t = static_cast<int>(targets.size());
    if (t == 0)
        return 0;
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    int best = t;
    do {
        // walk the permutation, cutting wherever there is no edge
        int paths = 1;
        for (int i = 1; i < t; ++i)
            if (!g.has_edge(targets[perm[i - 1]], targets[perm[i]]))
                ++paths;
        best = std::min(best, paths);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// 2-connectivity by definition: connected, n >= 3, and still connected
// after deleting any one vertex.
inline bool two_connected_by_definition(const Graph& g)
{
    int n = g.vertex_count();
    if (n < 3)
        return false;
    if (!is_connected_within(g, Bitset::all(n)))
        return false;
    for (int v = 0; v < n; ++v) {
        Bitset alive = Bitset::all(n);
        alive.reset(v);
        if (!is_connected_within(g, alive))
            return false;
    }
    return true;
}

} // namespace ham::testutil
