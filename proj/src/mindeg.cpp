#include "ham/mindeg.hpp"

#include <cassert>
#include <iostream>

#include "ham/closure.hpp"
#include "ham/connectivity.hpp"
#include "ham/exact.hpp"
#include "ham/extend.hpp"
#include "ham/gen.hpp"
#include "ham/rng.hpp"

namespace ham {

HaggkvistPartition make_partition(const Graph& g, const VertexSet& a1)
{
    int n = g.vertex_count();
    int delta = g.min_degree();
    if (!is_independent_set(g, a1))
        throw ContractViolation("partition: A1 is not independent");
    if (a1.count() != delta + 1)
        throw ContractViolation("partition: |A1| != delta+1");

    HaggkvistPartition p{a1, Bitset(n), Bitset(n)};
    for (int v = 0; v < n; ++v) {
        if (a1.test(v))
            continue;
        // |N(v) cap A1| >= delta/2, compared rationally
        if (2 * g.neighbors(v).intersect_count(a1) >= delta)
            p.a2.set(v);
        else
            p.a3.set(v);
    }
    return p;
}

HamCycle assemble_cycle(const Graph& g, const VertexSet& s, const PathCover& cover)
{
    int n = g.vertex_count();
    VertexSet t_set = s.complement();
    if (cover.covered != t_set)
        throw ContractViolation("assemble_cycle: cover does not cover T");
    int s_count = s.count();
    if (static_cast<int>(cover.paths.size()) != s_count || s_count == 0)
        throw ContractViolation("assemble_cycle: cover must have exactly |S| paths");

    // B: the S-T edges of G plus the cover's path edges inside T
    Graph b(n);
    for (int u : s) {
        Bitset nb = g.neighbors(u) & t_set;
        for (int v : nb)
            b.add_edge(u, v);
    }
    for (const auto& path : cover.paths)
        for (size_t i = 1; i < path.size(); ++i)
            if (!g.has_edge(path[i - 1], path[i]))
                throw ContractViolation("assemble_cycle: cover edge not in G");
            else
                b.add_edge(path[i - 1], path[i]);

    // B': connect all pairs inside S
    Graph b_prime = b;
    for (int u : s) {
        int v = s.next(u);
        for (; v >= 0; v = s.next(v))
            if (!b_prime.has_edge(u, v))
                b_prime.add_edge(u, v);
    }

    // B'': Bondy-Chvatal on S-T pairs only. In the pipeline regime the
    // degree conditions connect every S-T pair; what the construction
    // actually needs is the hop edges of the explicit cycle below, which
    // the validity check enforces.
    ClosureResult cl = augment(b_prime, EdgeFilter::between(s, t_set));

    // explicit cycle in B'': paths joined by S-hops, one S vertex per joint
    HamCycle cycle;
    cycle.reserve(n);
    std::vector<int> hops = s.to_vector();
    for (int i = 0; i < s_count; ++i) {
        const auto& path = cover.paths[i];
        cycle.insert(cycle.end(), path.begin(), path.end());
        cycle.push_back(hops[i]);
    }
    if (!is_hamiltonian_cycle(cl.closed, cycle))
        throw ContractViolation(
            "assemble_cycle: closure left a needed S-T hop unconnected");

    HamCycle lifted = lift_cycle(b_prime, cl.log, std::move(cycle));

    // a Hamiltonian cycle of B' cannot use an S-S edge, so this one lives in
    // B and hence in G
    for (size_t i = 0; i < lifted.size(); ++i) {
        int u = lifted[i], v = lifted[(i + 1) % lifted.size()];
        if (s.test(u) && s.test(v))
            throw ContractViolation("assemble_cycle: lifted cycle uses an S-S edge");
    }
    if (!is_hamiltonian_cycle(g, lifted))
        throw ContractViolation("assemble_cycle: result invalid in G");
    return lifted;
}

namespace {

SolveOutcome solve_exact_capped(const Graph& g, int cap)
{
    auto cycle = held_karp(g, {cap});
    if (cycle)
        return SolveOutcome::yes(std::move(*cycle));
    return SolveOutcome::no(ExhaustiveCert{"held-karp"});
}

SolveOutcome run_pipeline(const Graph& g, const DegreeRelaxedOptions& opt, int k)
{
    int n = g.vertex_count();
    int delta = g.min_degree();

    auto res = find_cycle_or_indepset(g);
    if (auto* cycle = std::get_if<HamCycle>(&res)) {
        if (!is_hamiltonian_cycle(g, *cycle))
            throw ContractViolation("pipeline: extension produced a bad cycle");
        return SolveOutcome::yes(std::move(*cycle));
    }

    HaggkvistPartition part = make_partition(g, std::get<VertexSet>(res));
    VertexSet a13 = part.a1 | part.a3;
    VertexSet s = part.a2.count() <= a13.count() ? part.a2 : a13;
    VertexSet t_set = s.complement();

    int s_count = s.count();
    int deficiency = t_set.count() - s_count;
    if (s_count < 3 * delta - n + 2)
        throw ContractViolation("pipeline: |S| below the Haggkvist bound");
    if (deficiency < 0 || deficiency > 6 * k)
        throw ContractViolation("pipeline: deficiency outside [0, 6k]");

    std::vector<int> t_ids;
    Graph gt = g.induced(t_set, &t_ids);

    TrialPlan plan;
    plan.t = deficiency;
    plan.epsilon = opt.epsilon;
    plan.master_seed = opt.seed;
    plan.threads = opt.threads;
    CoverOutcome cov = cover_with_deficiency(gt, deficiency, plan);

    if (!cov.cover) {
        CutCertificate cert;
        cert.s = s;
        cert.deficiency = deficiency;
        cert.epsilon = opt.epsilon;
        cert.seed = opt.seed;
        return SolveOutcome::no(std::move(cert));
    }

    // map the cover back to G's ids and stitch the cycle together
    PathCover mapped;
    mapped.covered = t_set;
    for (const auto& path : cov.cover->paths) {
        std::vector<int> p;
        p.reserve(path.size());
        for (int v : path)
            p.push_back(t_ids[v]);
        mapped.paths.push_back(std::move(p));
    }
    return SolveOutcome::yes(assemble_cycle(g, s, mapped));
}

} // namespace

SolveOutcome solve_degree_relaxed(const Graph& g, DegreeRelaxedOptions opt)
{
    int n = g.vertex_count();
    if (n < 3)
        return SolveOutcome::no(TooSmallCert{});

    TwoConnectivity conn = is_two_connected(g);
    if (!conn) {
        if (conn.cut_vertex)
            return SolveOutcome::no(CutVertexCert{*conn.cut_vertex});
        if (conn.component)
            return SolveOutcome::no(DisconnectedCert{*conn.component});
        return SolveOutcome::no(TooSmallCert{});
    }

    int delta = g.min_degree();
    if (2 * delta >= n)
        return SolveOutcome::yes(complete_closure_cycle(g)); // Dirac branch

    int k = measure_degree_k(g);
    if (34 * k >= n)
        return solve_exact_capped(g, opt.exact_cap);

    try {
        return run_pipeline(g, opt, k);
    } catch (const ContractViolation& e) {
        // a theory assertion failed; never answer unverified, fall back
        std::cerr << "mindeg pipeline assertion failed (" << e.what()
                  << "); falling back to exact solve\n";
        return solve_exact_capped(g, opt.exact_cap);
    }
}

VerifyResult verify_certificate(const Graph& g, const CutCertificate& cert,
                                VerifyOptions opt)
{
    int n = g.vertex_count();
    if (cert.s.capacity() != n)
        throw std::invalid_argument("certificate: S does not index this graph");
    int s_count = cert.s.count();
    if (s_count == 0)
        throw std::invalid_argument("certificate: S must be nonempty");
    VertexSet t_set = cert.s.complement();
    int deficiency = t_set.count() - s_count;
    if (deficiency < 0)
        throw std::invalid_argument("certificate: |T| < |S|");
    if (deficiency != cert.deficiency)
        throw std::invalid_argument("certificate: stated deficiency is wrong");

    std::vector<int> t_ids;
    Graph gt = g.induced(t_set, &t_ids);

    VerifyResult res;
    auto map_back = [&](const PathCover& local) {
        PathCover mapped;
        mapped.covered = t_set;
        for (const auto& path : local.paths) {
            std::vector<int> p;
            for (int v : path)
                p.push_back(t_ids[v]);
            mapped.paths.push_back(std::move(p));
        }
        return mapped;
    };

    if (opt.exact) {
        if (gt.vertex_count() > 20)
            throw RefusedError("exact verification capped at |T| <= 20");
        auto oracle = exact_min_path_cover(gt, Bitset::all(gt.vertex_count()));
        if (oracle.min_paths <= s_count) {
            // split paths until exactly |S| of them
            std::vector<std::vector<int>> paths = oracle.witness.paths;
            while (static_cast<int>(paths.size()) < s_count) {
                bool split = false;
                for (auto& p : paths)
                    if (p.size() >= 2) {
                        int last = p.back();
                        p.pop_back();
                        paths.push_back({last});
                        split = true;
                        break;
                    }
                if (!split)
                    throw ContractViolation("cannot pad exact cover to |S| paths");
            }
            PathCover local;
            local.covered = Bitset::all(gt.vertex_count());
            local.paths = std::move(paths);
            res.refutation = map_back(local);
            return res;
        }
        res.supported = true;
        return res;
    }

    TrialPlan plan;
    plan.t = deficiency;
    plan.epsilon = cert.epsilon > 0 ? cert.epsilon : 1e-6;
    plan.master_seed = opt.seed ? *opt.seed : mix_seed(cert.seed, 0x7e7e7e7eULL);
    plan.threads = opt.threads;
    CoverOutcome cov = cover_with_deficiency(gt, deficiency, plan);
    res.trials_run = cov.trials_run;
    if (cov.cover) {
        res.refutation = map_back(*cov.cover);
        return res;
    }
    res.supported = true;
    return res;
}

} // namespace ham
