#include "ham/gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ham/rng.hpp"

namespace ham {

namespace {

HamCycle plant_cycle(Graph& g, SplitMix64& rng)
{
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    rng_shuffle(rng, order);
    for (int i = 0; i < n; ++i) {
        int u = order[i], v = order[(i + 1) % n];
        if (!g.has_edge(u, v))
            g.add_edge(u, v);
    }
    return order;
}

// Add random edges from v (within `pool` first, then anywhere) until its
// degree reaches `target`.
void repair_degree(Graph& g, int v, int target, const Bitset& pool,
                   SplitMix64& rng)
{
    auto draw_from = [&](const Bitset& candidates) {
        std::vector<int> cand = candidates.to_vector();
        while (g.degree(v) < target && !cand.empty()) {
            int idx = rng_below(rng, static_cast<int>(cand.size()));
            g.add_edge(v, cand[idx]);
            cand[idx] = cand.back();
            cand.pop_back();
        }
    };
    Bitset primary = pool;
    primary.andnot_with(g.neighbors(v));
    if (primary.test(v))
        primary.reset(v);
    draw_from(primary);
    if (g.degree(v) < target) {
        Bitset rest = g.neighbors(v).complement();
        rest.reset(v);
        draw_from(rest);
    }
}

GeneratedInstance generate_count_relaxed(const InstanceSpec& spec)
{
    SplitMix64 rng(spec.seed);
    int n = spec.n, k = spec.k;
    int threshold = (n + 1) / 2; // d(v) >= n/2 as a rational comparison
    Graph g(n);
    GeneratedInstance out;

    // dense part = ids 0..n-k-1, sparse tail = the last k ids
    Bitset dense(n);
    for (int v = 0; v < n - k; ++v)
        dense.set(v);

    if (spec.planted)
        out.planted_cycle = plant_cycle(g, rng);

    // quasi-random dense block, then greedy repair to the degree bound
    double p = std::min(0.92, 0.55 * n / std::max(1, n - k - 1));
    for (int u = 0; u < n - k; ++u)
        for (int v = u + 1; v < n - k; ++v)
            if (!g.has_edge(u, v) && rng_coin(rng, p))
                g.add_edge(u, v);
    for (int v = 0; v < n - k; ++v)
        if (g.degree(v) < threshold)
            repair_degree(g, v, threshold, dense, rng);

    // sparse tail: a couple of random edges into the dense part (the planted
    // cycle may already touch these vertices)
    for (int v = n - k; v < n; ++v) {
        int want = std::min(2, n - k);
        while (g.degree(v) < want) {
            int u = rng_below(rng, n - k);
            if (u != v && !g.has_edge(u, v))
                g.add_edge(u, v);
        }
    }

    out.graph = std::move(g);
    return out;
}

GeneratedInstance generate_degree_relaxed(const InstanceSpec& spec)
{
    SplitMix64 rng(spec.seed);
    int n = spec.n;
    int threshold = std::max(0, (n + 1) / 2 - spec.k);
    Graph g(n);
    GeneratedInstance out;

    if (spec.planted)
        out.planted_cycle = plant_cycle(g, rng);

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng_coin(rng, 0.52))
                g.add_edge(u, v);

    Bitset everyone = Bitset::all(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < threshold)
            repair_degree(g, v, threshold, everyone, rng);

    out.graph = std::move(g);
    return out;
}

} // namespace

void InstanceSpec::validate() const
{
    if (n < 3)
        throw std::invalid_argument("instance needs n >= 3");
    if (k < 0 || k > n)
        throw std::invalid_argument("instance needs 0 <= k <= n");
    int threshold = model == InstanceModel::count_relaxed
                        ? (n + 1) / 2
                        : std::max(0, (n + 1) / 2 - k);
    if (threshold > n - 1)
        throw std::invalid_argument("degree bound exceeds n-1: infeasible");
}

GeneratedInstance generate(const InstanceSpec& spec)
{
    spec.validate();
    GeneratedInstance out = spec.model == InstanceModel::count_relaxed
                                ? generate_count_relaxed(spec)
                                : generate_degree_relaxed(spec);
    // the repair loops guarantee these; fail loudly if they ever do not
    if (spec.model == InstanceModel::count_relaxed) {
        if (measure_count_k(out.graph) > spec.k)
            throw ContractViolation("generator broke the count-relaxed bound");
    } else {
        if (measure_degree_k(out.graph) > spec.k)
            throw ContractViolation("generator broke the degree-relaxed bound");
    }
    return out;
}

int measure_count_k(const Graph& g)
{
    int low = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!meets_half_degree(g, v))
            ++low;
    return low;
}

int measure_degree_k(const Graph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return 0;
    return std::max(0, (n + 1) / 2 - g.min_degree());
}

InstanceModel model_from_name(const std::string& name)
{
    if (name == "count-relaxed" || name == "count")
        return InstanceModel::count_relaxed;
    if (name == "degree-relaxed" || name == "degree")
        return InstanceModel::degree_relaxed;
    throw std::invalid_argument("unknown instance model: " + name);
}

std::string model_name(InstanceModel m)
{
    return m == InstanceModel::count_relaxed ? "count-relaxed" : "degree-relaxed";
}

} // namespace ham
