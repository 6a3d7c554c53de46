#include "ham/exact.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace ham {

namespace {

std::vector<uint32_t> small_adj_rows(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            adj[u] |= uint32_t{1} << v;
    return adj;
}

} // namespace

std::optional<HamCycle> held_karp(const Graph& g, HeldKarpOptions opt)
{
    int n = g.vertex_count();
    if (n > opt.cap)
        throw RefusedError("held-karp refused: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(opt.cap));
    if (n < 3)
        return std::nullopt;

    std::vector<uint32_t> adj = small_adj_rows(g);
    uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

    // dp[mask] = set of endpoints v such that a simple path starting at 0
    // visits exactly `mask` and ends at v
    std::vector<uint32_t> dp(size_t{1} << n, 0);
    dp[1] = 1;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        if (!(mask & 1))
            continue;
        uint32_t ends = dp[mask];
        if (!ends)
            continue;
        uint32_t cand = full & ~mask;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (adj[u] & ends)
                dp[mask | (uint32_t{1} << u)] |= uint32_t{1} << u;
        }
    }

    uint32_t closing = dp[full] & adj[0];
    if (!closing)
        return std::nullopt;

    // walk the table backwards, lowest-id predecessor each step
    HamCycle cycle(n);
    int v = std::countr_zero(closing);
    uint32_t mask = full;
    for (int i = n - 1; i >= 1; --i) {
        cycle[i] = v;
        uint32_t prev_mask = mask & ~(uint32_t{1} << v);
        uint32_t preds = dp[prev_mask] & adj[v];
        assert(preds);
        v = std::countr_zero(preds);
        mask = prev_mask;
    }
    cycle[0] = 0;
    assert(is_hamiltonian_cycle(g, cycle));
    return cycle;
}

std::optional<HamCycle> brute_force(const Graph& g, BruteForceOptions opt)
{
    int n = g.vertex_count();
    if (n > opt.cap)
        throw RefusedError("brute-force refused: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(opt.cap));
    if (n < 3)
        return std::nullopt;

    std::vector<int> path{0};
    Bitset used(n);
    used.set(0);

    // lexicographically first extension at every step
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n)
            return g.has_edge(path.back(), 0);
        Bitset cand = g.neighbors(path.back());
        cand.andnot_with(used);
        for (int u : cand) {
            path.push_back(u);
            used.set(u);
            if (self(self))
                return true;
            used.reset(u);
            path.pop_back();
        }
        return false;
    };
    if (rec(rec))
        return path;
    return std::nullopt;
}

namespace {

using u128 = unsigned __int128;

u128 checked_add(u128 a, u128 b)
{
    u128 s = a + b;
    if (s < a)
        throw CountOverflow("cycle count overflows 128 bits");
    return s;
}

} // namespace

unsigned long long ie_count(const Graph& g, IeCountOptions opt)
{
    int n = g.vertex_count();
    if (n > opt.cap)
        throw RefusedError("ie-count refused: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(opt.cap));
    if (n < 3)
        throw std::invalid_argument("ie-count needs n >= 3");

    std::vector<uint32_t> adj = small_adj_rows(g);
    // positive and negative halves of the alternating sum, checked separately
    u128 plus = 0, minus = 0;
    // subsets of V \ {0}, encoded over bits 1..n-1
    uint32_t sub_count = uint32_t{1} << (n - 1);
    std::vector<u128> walk(n), next(n);
    for (uint32_t s = 0; s < sub_count; ++s) {
        uint32_t avoid = s << 1;
        uint32_t allowed = ((n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1)) & ~avoid;
        std::fill(walk.begin(), walk.end(), u128{0});
        walk[0] = 1;
        for (int step = 0; step < n; ++step) {
            std::fill(next.begin(), next.end(), u128{0});
            uint32_t vs = allowed;
            while (vs) {
                int v = std::countr_zero(vs);
                vs &= vs - 1;
                uint32_t nb = adj[v] & allowed;
                u128 acc = 0;
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    acc = checked_add(acc, walk[u]);
                }
                next[v] = acc;
            }
            walk.swap(next);
        }
        if (std::popcount(s) & 1)
            minus = checked_add(minus, walk[0]);
        else
            plus = checked_add(plus, walk[0]);
    }
    // each undirected cycle was counted once per direction
    assert(plus >= minus);
    u128 undirected = (plus - minus) / 2;
    if (undirected > ~0ULL)
        throw CountOverflow("cycle count overflows 64 bits");
    return static_cast<unsigned long long>(undirected);
}

bool PathCover::valid_in(const Graph& g) const
{
    Bitset seen(g.vertex_count());
    for (const auto& p : paths) {
        if (p.empty())
            return false;
        for (size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.vertex_count() || seen.test(v))
                return false;
            seen.set(v);
            if (i > 0 && !g.has_edge(p[i - 1], v))
                return false;
        }
    }
    return seen == covered;
}

MinPathCoverResult exact_min_path_cover(const Graph& g, const Bitset& targets)
{
    std::vector<int> ids = targets.to_vector();
    int t = static_cast<int>(ids.size());
    if (t > 20)
        throw RefusedError("exact-min-path-cover refused: " + std::to_string(t) +
                           " targets exceeds cap 20");

    MinPathCoverResult res;
    res.witness.covered = targets;
    if (t == 0)
        return res;

    // adjacency restricted to targets, in target indices
    std::vector<uint32_t> adj(t, 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j && g.has_edge(ids[i], ids[j]))
                adj[i] |= uint32_t{1} << j;

    constexpr uint8_t INF = 0xff;
    uint32_t full = (uint32_t{1} << t) - 1;
    // f[mask*t + i]: min #paths covering exactly mask, last path ends at i
    std::vector<uint8_t> f(size_t(full + 1) * t, INF);
    for (int i = 0; i < t; ++i)
        f[(size_t{1} << i) * t + i] = 1;

    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2)
            continue;
        uint32_t is = mask;
        while (is) {
            int i = std::countr_zero(is);
            is &= is - 1;
            uint32_t prev = mask & ~(uint32_t{1} << i);
            const uint8_t* row = &f[size_t(prev) * t];
            uint8_t best = INF;
            // extend the last path along an edge
            uint32_t nb = adj[i] & prev;
            while (nb) {
                int j = std::countr_zero(nb);
                nb &= nb - 1;
                best = std::min(best, row[j]);
            }
            // or start a fresh singleton path at i
            uint32_t js = prev;
            while (js) {
                int j = std::countr_zero(js);
                js &= js - 1;
                if (row[j] != INF)
                    best = std::min<uint8_t>(best, row[j] + 1);
            }
            f[size_t(mask) * t + i] = best;
        }
    }

    int best_end = 0;
    uint8_t best = INF;
    for (int i = 0; i < t; ++i)
        if (f[size_t(full) * t + i] < best) {
            best = f[size_t(full) * t + i];
            best_end = i;
        }
    assert(best != INF); // singleton decomposition always exists
    res.min_paths = best;

    // reconstruct: prefer the edge branch, then the lowest predecessor
    std::vector<std::vector<int>> paths;
    std::vector<int> cur{ids[best_end]};
    uint32_t mask = full;
    int i = best_end;
    while (std::popcount(mask) > 1) {
        uint32_t prev = mask & ~(uint32_t{1} << i);
        const uint8_t* row = &f[size_t(prev) * t];
        uint8_t want = f[size_t(mask) * t + i];
        int pick = -1;
        bool extended = false;
        uint32_t nb = adj[i] & prev;
        while (nb) {
            int j = std::countr_zero(nb);
            nb &= nb - 1;
            if (row[j] == want) {
                pick = j;
                extended = true;
                break;
            }
        }
        if (pick < 0) {
            uint32_t js = prev;
            while (js) {
                int j = std::countr_zero(js);
                js &= js - 1;
                if (row[j] != INF && uint8_t(row[j] + 1) == want) {
                    pick = j;
                    break;
                }
            }
        }
        assert(pick >= 0);
        if (extended) {
            cur.insert(cur.begin(), ids[pick]);
        } else {
            paths.push_back(std::move(cur));
            cur = {ids[pick]};
        }
        mask = prev;
        i = pick;
    }
    paths.push_back(std::move(cur));
    std::reverse(paths.begin(), paths.end());
    res.witness.paths = std::move(paths);
    assert(static_cast<int>(res.witness.paths.size()) == res.min_paths);
    assert(res.witness.valid_in(g));
    return res;
}

} // namespace ham
