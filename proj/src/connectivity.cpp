#include "ham/connectivity.hpp"

#include <algorithm>
#include <vector>

namespace ham {

bool is_connected_within(const Graph& g, const Bitset& alive)
{
    int start = alive.first();
    if (start < 0)
        return true;
    Bitset seen(g.vertex_count());
    std::vector<int> stack{start};
    seen.set(start);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset nb = g.neighbors(v) & alive;
        nb.andnot_with(seen);
        for (int u : nb) {
            seen.set(u);
            stack.push_back(u);
        }
    }
    return seen.count() == alive.count();
}

TwoConnectivity is_two_connected(const Graph& g)
{
    int n = g.vertex_count();
    TwoConnectivity res;
    if (n < 3) {
        res.too_small = true;
        return res;
    }

    // connectivity first, so a disconnection witness is a whole component
    Bitset all = Bitset::all(n);
    {
        Bitset seen(n);
        std::vector<int> stack{0};
        seen.set(0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset nb = g.neighbors(v);
            nb.andnot_with(seen);
            for (int u : nb) {
                seen.set(u);
                stack.push_back(u);
            }
        }
        if (seen.count() != n) {
            res.component = seen;
            return res;
        }
    }

    // iterative lowpoint DFS from vertex 0, neighbors in increasing id
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<int> articulation;
    int timer = 0;

    struct Frame {
        int v;
        int next_nb; // next neighbor id to try (exclusive lower bound)
        int children = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    bool root_art = false;

    while (!stack.empty()) {
        Frame& f = stack.back();
        int u = g.neighbors(f.v).next(f.next_nb);
        if (u < 0) {
            int v = f.v;
            int children = f.children;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& pf = stack.back();
                low[pf.v] = std::min(low[pf.v], low[v]);
                if (low[v] >= disc[pf.v] && pf.v != 0)
                    articulation.push_back(pf.v);
            } else if (children > 1) {
                root_art = true;
            }
            continue;
        }
        f.next_nb = u;
        if (disc[u] < 0) {
            ++f.children;
            disc[u] = low[u] = timer++;
            parent[u] = f.v;
            stack.push_back({u, -1, 0});
        } else if (u != parent[f.v]) {
            low[f.v] = std::min(low[f.v], disc[u]);
        }
    }

    if (root_art)
        articulation.push_back(0);
    if (!articulation.empty()) {
        res.cut_vertex = *std::min_element(articulation.begin(), articulation.end());
        return res;
    }
    res.two_connected = true;
    return res;
}

} // namespace ham
