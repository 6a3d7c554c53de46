#include "ham/pathcover.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "ham/rng.hpp"

namespace ham {

uint64_t TrialPlan::trial_count() const
{
    if (t == 0)
        return 1;
    double trials = std::ceil(std::exp(2.0 * t) * std::log(1.0 / epsilon));
    if (!(trials >= 1))
        throw std::invalid_argument("trial plan: epsilon must be in (0,1)");
    if (trials > 4e18)
        return uint64_t{4'000'000'000'000'000'000};
    return static_cast<uint64_t>(trials);
}

Coloring make_coloring(const TrialPlan& plan, uint64_t trial_index, int n)
{
    Coloring f;
    f.num_colors = 2 * plan.t;
    f.color.resize(n);
    SplitMix64 rng(mix_seed(plan.master_seed, trial_index));
    for (int v = 0; v < n; ++v)
        f.color[v] = static_cast<uint8_t>(rng_below(rng, std::max(1, f.num_colors)));
    return f;
}

namespace {

constexpr uint8_t INF = 0xff;

// Decode one DP decision at (X,v); mirrors the fill order so reconstruction
// needs no parent table. Neighbor branch first, then lowest u.
struct Decoder {
    const Graph* g;
    const Coloring* f;
    const std::vector<uint8_t>* table;
    int n;

    uint8_t at(uint32_t mask, int v) const
    {
        return (*table)[size_t(mask) * n + v];
    }
};

} // namespace

std::optional<DpSuccess> dp_single_coloring(const Graph& g, const Coloring& f,
                                            int t)
{
    int n = g.vertex_count();
    int colors = f.num_colors;
    assert(colors == 2 * t);
    if (t == 0)
        return DpSuccess{}; // n singleton paths, nothing nontrivial

    uint32_t full = (uint32_t{1} << colors) - 1;
    std::vector<uint8_t> table(size_t(full + 1) * n, INF);

    uint32_t hit_mask = 0;
    int hit_v = -1;

    // per-mask minimum and runner-up of T[mask, .] for the new-path branch
    std::vector<uint8_t> min1(full + 1, INF), min2(full + 1, INF);
    std::vector<int> arg1(full + 1, -1);

    for (uint32_t mask = 1; mask <= full && hit_v < 0; ++mask) {
        uint8_t* row = &table[size_t(mask) * n];
        bool single = std::popcount(mask) == 1;
        for (int v = 0; v < n; ++v) {
            int c = f.color[v];
            if (!((mask >> c) & 1))
                continue; // T[X,v] = inf when f(v) not in X
            uint8_t best = INF;
            if (single) {
                best = 1;
            } else {
                uint32_t prev = mask & ~(uint32_t{1} << c);
                // extend the last path along an edge into v
                const uint8_t* prow = &table[size_t(prev) * n];
                for (int u : g.neighbors(v))
                    best = std::min(best, prow[u]);
                // or open a fresh path at v
                uint8_t other = arg1[prev] != v ? min1[prev] : min2[prev];
                if (other != INF)
                    best = std::min<uint8_t>(best, other + 1);
            }
            row[v] = best;
            if (best != INF && best <= std::popcount(mask) - t) {
                hit_mask = mask;
                hit_v = v;
                break;
            }
        }
        if (hit_v < 0) {
            uint8_t m1 = INF, m2 = INF;
            int a1 = -1;
            for (int v = 0; v < n; ++v) {
                uint8_t val = row[v];
                if (val < m1) {
                    m2 = m1;
                    m1 = val;
                    a1 = v;
                } else if (val < m2) {
                    m2 = val;
                }
            }
            min1[mask] = m1;
            min2[mask] = m2;
            arg1[mask] = a1;
        }
    }

    if (hit_v < 0)
        return std::nullopt;

    // walk back from (hit_mask, hit_v); each step strips one color
    DpSuccess out;
    std::vector<int> cur{hit_v};
    uint32_t mask = hit_mask;
    int v = hit_v;
    while (std::popcount(mask) > 1) {
        uint32_t prev = mask & ~(uint32_t{1} << f.color[v]);
        const uint8_t* prow = &table[size_t(prev) * n];
        uint8_t want = table[size_t(mask) * n + v];
        int pick = -1;
        bool extended = false;
        for (int u : g.neighbors(v))
            if (prow[u] == want) {
                pick = u;
                extended = true;
                break;
            }
        if (pick < 0) {
            for (int u = 0; u < n; ++u)
                if (u != v && prow[u] != INF && uint8_t(prow[u] + 1) == want) {
                    pick = u;
                    break;
                }
        }
        if (pick < 0)
            throw ContractViolation("path-cover DP reconstruction failed");
        if (extended) {
            cur.insert(cur.begin(), pick);
        } else {
            out.nontrivial_paths.push_back(std::move(cur));
            cur = {pick};
        }
        mask = prev;
        v = pick;
    }
    out.nontrivial_paths.push_back(std::move(cur));

    // drop the singletons the DP may have opened; padding re-adds them
    std::erase_if(out.nontrivial_paths,
                  [](const std::vector<int>& p) { return p.size() < 2; });
    return out;
}

namespace {

PathCover pad_to_exact(const Graph& g, std::vector<std::vector<int>> paths,
                       int t)
{
    int n = g.vertex_count();
    PathCover pc;
    pc.covered = Bitset::all(n);
    Bitset used(n);
    for (const auto& p : paths)
        for (int v : p)
            used.set(v);
    for (int v = 0; v < n; ++v)
        if (!used.test(v))
            paths.push_back({v});

    // cover found with too few paths: split nontrivial paths until exactly
    // n-t remain (always possible, cutting edges only adds paths)
    int want = n - t;
    for (size_t i = 0; static_cast<int>(paths.size()) < want; ) {
        if (i >= paths.size())
            throw ContractViolation("cannot pad path cover to n-t paths");
        if (paths[i].size() >= 2) {
            int last = paths[i].back();
            paths[i].pop_back();
            paths.push_back({last});
        } else {
            ++i;
        }
    }
    if (static_cast<int>(paths.size()) != want)
        throw ContractViolation("path cover has more than n-t paths");
    pc.paths = std::move(paths);
    if (!pc.valid_in(g))
        throw ContractViolation("reconstructed path cover invalid");
    return pc;
}

} // namespace

CoverOutcome cover_with_deficiency(const Graph& g, int t, const TrialPlan& plan)
{
    int n = g.vertex_count();
    if (t < 0 || t > n)
        throw std::invalid_argument("cover deficiency t out of range [0,n]");

    CoverOutcome out;
    if (t == 0) {
        // n singletons, no randomness involved
        std::vector<std::vector<int>> paths;
        out.cover = pad_to_exact(g, std::move(paths), 0);
        out.trials_run = 1;
        return out;
    }
    if (n - t < 1) {
        // covering n >= 1 vertices needs at least one path; provably no cover
        return out;
    }

    TrialPlan local = plan;
    local.t = t;
    uint64_t trials = local.trial_count();
    int threads = std::max(1, plan.threads);

    if (threads == 1) {
        for (uint64_t i = 0; i < trials; ++i) {
            Coloring f = make_coloring(local, i, n);
            if (auto hit = dp_single_coloring(g, f, t)) {
                out.cover = pad_to_exact(g, std::move(hit->nontrivial_paths), t);
                out.trials_run = i + 1;
                out.success_trial = i;
                return out;
            }
        }
        out.trials_run = trials;
        return out;
    }

    // parallel trials; the accepted result is the lowest successful index,
    // so the outcome does not depend on scheduling
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{~uint64_t{0}};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                uint64_t i = next.fetch_add(1);
                if (i >= trials || i >= best.load())
                    return;
                Coloring f = make_coloring(local, i, n);
                if (dp_single_coloring(g, f, t)) {
                    uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i))
                        ;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();

    uint64_t win = best.load();
    if (win == ~uint64_t{0}) {
        out.trials_run = trials;
        return out;
    }
    // redo the winning trial single-threaded for the witness
    Coloring f = make_coloring(local, win, n);
    auto hit = dp_single_coloring(g, f, t);
    if (!hit)
        throw ContractViolation("winning trial failed to reproduce");
    out.cover = pad_to_exact(g, std::move(hit->nontrivial_paths), t);
    out.trials_run = win + 1;
    out.success_trial = win;
    return out;
}

} // namespace ham
