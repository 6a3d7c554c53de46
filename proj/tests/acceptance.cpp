// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero if any criterion fails. Runs from ctest or standalone.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ham/closure.hpp"
#include "ham/connectivity.hpp"
#include "ham/exact.hpp"
#include "ham/extend.hpp"
#include "ham/gen.hpp"
#include "ham/kernel.hpp"
#include "ham/mindeg.hpp"
#include "ham/pathcover.hpp"
#include "ham/rng.hpp"
#include "test_util.hpp"

using namespace ham;
using namespace ham::testutil;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

// h hubs joined to a rim cycle and each other; for n <= 3h+4 no independent
// set of size delta+1 exists, forcing the cycle answer
Graph hub_wheel(int n, int h)
{
    Graph g(n);
    int rim = n - h;
    for (int v = 0; v < rim; ++v)
        g.add_edge(v, (v + 1) % rim);
    for (int a = rim; a < n; ++a) {
        for (int v = 0; v < rim; ++v)
            g.add_edge(a, v);
        for (int b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    }
    return g;
}

bool criterion_kernel_size(std::string& detail)
{
    SplitMix64 seeds(90001);
    int built = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 20 + rng_below(seeds, 1981); // up to 2000
        int k = rng_below(seeds, 11);
        InstanceSpec spec{InstanceModel::count_relaxed, n, k, seeds(), i % 4 == 0};
        Graph g = generate(spec).graph;
        HighLowSplit split = split_high_low(g);
        int measured = split.low.count();
        if (measured == 0)
            continue; // Dirac regime, no kernel to build
        ClosureResult cl = augment(g, EdgeFilter::within(split.high));
        KernelResult kr = kernelize(cl.closed, split);
        ++built;
        if (kr.g_prime.vertex_count() > 3 * measured) {
            detail = "instance " + std::to_string(i) + " broke the 3k bound";
            return false;
        }
    }
    detail = std::to_string(built) + "/1000 instances had nonempty S; all kernels <= 3k";
    return true;
}

bool criterion_kernel_equivalence(std::string& detail)
{
    SplitMix64 seeds(90002);
    int done = 0;
    while (done < 500) {
        int n = 6 + rng_below(seeds, 11); // up to 16
        Graph g = random_graph(n, 0.35 + 0.05 * (done % 8), seeds());
        HighLowSplit split = split_high_low(g);
        if (split.low.empty())
            continue;
        ClosureResult cl = augment(g, EdgeFilter::within(split.high));
        KernelResult kr = kernelize(cl.closed, split);
        bool kernel_ham = held_karp(kr.g_prime).has_value();
        bool orig_ham = held_karp(g).has_value();
        if (kernel_ham != orig_ham) {
            detail = "equivalence broke on instance " + std::to_string(done);
            return false;
        }
        ++done;
    }
    detail = "500/500 kernels equivalent to their originals";
    return true;
}

bool criterion_closure_soundness(std::string& detail)
{
    SplitMix64 seeds(90003);
    for (int i = 0; i < 500; ++i) {
        int n = 4 + rng_below(seeds, 9); // up to 12
        Graph g = random_graph(n, 0.3 + 0.05 * (i % 9), seeds());
        ClosureResult cl = augment(g, EdgeFilter::all_pairs());
        auto before = brute_force(g, {12});
        auto after = brute_force(cl.closed, {12});
        if (before.has_value() != after.has_value()) {
            detail = "Hamiltonicity changed across closure on instance " +
                     std::to_string(i);
            return false;
        }
        if (after) {
            HamCycle lifted = lift_cycle(g, cl.log, *after);
            if (!is_hamiltonian_cycle(g, lifted)) {
                detail = "lift produced an invalid cycle on instance " +
                         std::to_string(i);
                return false;
            }
        }
    }
    detail = "500/500 instances: closure preserved the answer, lifts validated";
    return true;
}

bool criterion_dirac_ore(std::string& detail)
{
    SplitMix64 seeds(90004);
    for (int i = 0; i < 100; ++i) {
        int n = 3 + rng_below(seeds, 198); // up to 200
        InstanceSpec spec{InstanceModel::degree_relaxed, n, 0, seeds(), false};
        Graph g = generate(spec).graph;
        HamCycle cycle = complete_closure_cycle(g);
        if (!is_hamiltonian_cycle(g, cycle)) {
            detail = "closure route failed on a Dirac instance, n=" +
                     std::to_string(n);
            return false;
        }
    }
    detail = "100/100 Dirac instances produced validated cycles via closure";
    return true;
}

bool criterion_nash_williams(std::string& detail)
{
    SplitMix64 seeds(90005);
    int cycles = 0, sets = 0, small_checked = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g;
        if (i % 10 == 8) {
            int h = 2 + rng_below(seeds, 7);
            g = hub_wheel(3 * h + 4 - rng_below(seeds, 3), h);
        } else if (i % 10 == 9) {
            int a = 3 + rng_below(seeds, 4); // K_{a,a+1}, non-Hamiltonian
            g = complete_bipartite(a, a + 1);
        } else {
            int target = 5 + rng_below(seeds, 56); // up to 60
            while (true) {
                g = random_graph(target, 0.45 + 0.05 * rng_below(seeds, 8),
                                 seeds());
                if (3 * g.min_degree() >= target + 2 &&
                    is_two_connected(g).two_connected)
                    break;
            }
        }
        int n = g.vertex_count();
        int delta = g.min_degree();
        auto res = find_cycle_or_indepset(g);
        bool got_cycle = std::holds_alternative<HamCycle>(res);
        if (got_cycle) {
            if (!is_hamiltonian_cycle(g, std::get<HamCycle>(res))) {
                detail = "invalid cycle on instance " + std::to_string(i);
                return false;
            }
            ++cycles;
        } else {
            const VertexSet& s = std::get<VertexSet>(res);
            if (s.count() != delta + 1 || !is_independent_set(g, s)) {
                detail = "invalid independent set on instance " + std::to_string(i);
                return false;
            }
            ++sets;
        }
        if (n <= 14) {
            ++small_checked;
            bool ham = held_karp(g).has_value();
            if (ham != got_cycle) {
                detail = "decision mismatch vs held-karp on instance " +
                         std::to_string(i);
                return false;
            }
        }
        if (i % 10 == 8 && !got_cycle) {
            detail = "a wheel-type instance returned an independent set";
            return false;
        }
    }
    detail = std::to_string(cycles) + " cycles / " + std::to_string(sets) +
             " independent sets; " + std::to_string(small_checked) +
             " small instances matched held-karp";
    return true;
}

bool criterion_pathcover_oracle(std::string& detail)
{
    SplitMix64 seeds(90006);
    int misses = 0;
    for (int i = 0; i < 400; ++i) {
        int n = 3 + rng_below(seeds, 12); // up to 14
        Graph g = random_graph(n, 0.25 + 0.05 * (i % 10), seeds());
        int t = std::min(n, rng_below(seeds, 5));
        auto oracle = exact_min_path_cover(g, Bitset::all(n));
        bool coverable = oracle.min_paths <= n - t;
        TrialPlan plan{0, 1e-6, seeds(), 1};
        CoverOutcome r = cover_with_deficiency(g, t, plan);
        if (r.cover && !coverable) {
            detail = "false positive cover on instance " + std::to_string(i);
            return false; // soundness failure, not a Monte-Carlo miss
        }
        if (!r.cover && coverable)
            ++misses;
    }
    if (misses > 1) {
        detail = std::to_string(misses) + " one-sided misses (allowed: 1)";
        return false;
    }
    detail = "400 instances, " + std::to_string(misses) + " one-sided misses";
    return true;
}

bool criterion_degree_relaxed_end_to_end(std::string& detail)
{
    SplitMix64 seeds(90007);
    for (int i = 0; i < 200; ++i) {
        int n = 4 + rng_below(seeds, 15); // up to 18
        int k = rng_below(seeds, 3);
        InstanceSpec spec{InstanceModel::degree_relaxed, n, k, seeds(),
                          i % 2 == 0};
        Graph g = generate(spec).graph;
        auto truth = held_karp(g);
        DegreeRelaxedOptions opt;
        opt.seed = seeds();
        SolveOutcome o = solve_degree_relaxed(g, opt);
        if (o.hamiltonian != truth.has_value()) {
            detail = "mismatch vs held-karp on instance " + std::to_string(i);
            return false;
        }
        if (o.hamiltonian && !is_hamiltonian_cycle(g, *o.cycle)) {
            detail = "invalid cycle on instance " + std::to_string(i);
            return false;
        }
    }

    Graph k1921 = complete_bipartite(19, 21);
    DegreeRelaxedOptions opt;
    opt.seed = 11;
    SolveOutcome o = solve_degree_relaxed(k1921, opt);
    const CutCertificate* cert =
        o.certificate ? std::get_if<CutCertificate>(&*o.certificate) : nullptr;
    if (o.hamiltonian || !cert) {
        detail = "K_{19,21} did not produce a cut certificate";
        return false;
    }
    if (cert->deficiency != 2) {
        detail = "K_{19,21} certificate deficiency " +
                 std::to_string(cert->deficiency) + ", expected 2";
        return false;
    }
    if (!verify_certificate(k1921, *cert).supported) {
        detail = "K_{19,21} certificate not supported on re-verification";
        return false;
    }
    detail = "200/200 matched held-karp; K_{19,21} certificate supported, "
             "deficiency 2";
    return true;
}

bool criterion_scaling(std::string& detail)
{
    using clock = std::chrono::steady_clock;

    InstanceSpec spec8{InstanceModel::count_relaxed, 5000, 8, 424242, true};
    Graph g8 = generate(spec8).graph;
    auto t0 = clock::now();
    SolveOutcome o8 = solve_count_relaxed(g8);
    double s8 = std::chrono::duration<double>(clock::now() - t0).count();
    if (!o8.hamiltonian || !is_hamiltonian_cycle(g8, *o8.cycle)) {
        detail = "n=5000 k=8 instance not solved correctly";
        return false;
    }
    if (s8 >= 60) {
        detail = "n=5000 k=8 took " + std::to_string(s8) + "s (budget 60s)";
        return false;
    }

    InstanceSpec spec0{InstanceModel::count_relaxed, 5000, 0, 434343, true};
    Graph g0 = generate(spec0).graph;
    t0 = clock::now();
    SolveOutcome o0 = solve_count_relaxed(g0);
    double s0 = std::chrono::duration<double>(clock::now() - t0).count();
    if (!o0.hamiltonian || !is_hamiltonian_cycle(g0, *o0.cycle)) {
        detail = "n=5000 k=0 instance not solved correctly";
        return false;
    }
    if (s0 >= 30) {
        detail = "n=5000 k=0 took " + std::to_string(s0) + "s (budget 30s)";
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "k=8 in %.2fs (<60s), k=0 in %.2fs (<30s)",
                  s8, s0);
    detail = buf;
    return true;
}

bool criterion_certificate_roundtrip(std::string& detail)
{
    // honest certificates from the unbalanced-bipartite family
    int supported = 0;
    for (int m : {19, 24, 29}) {
        Graph g = complete_bipartite(m, m + 2);
        DegreeRelaxedOptions opt;
        opt.seed = 1000 + m;
        SolveOutcome o = solve_degree_relaxed(g, opt);
        const CutCertificate* cert =
            o.certificate ? std::get_if<CutCertificate>(&*o.certificate)
                          : nullptr;
        if (!cert) {
            detail = "K_{" + std::to_string(m) + "," + std::to_string(m + 2) +
                     "} produced no cut certificate";
            return false;
        }
        VerifyOptions vo;
        vo.seed = 555 + m; // fresh seed, independent of the solve
        if (!verify_certificate(g, *cert, vo).supported) {
            detail = "honest certificate refuted for m=" + std::to_string(m);
            return false;
        }
        ++supported;

        // corrupt: claim the same cut against the planted-Hamiltonian variant
        Graph h = g;
        h.add_edge(m, m + 3);
        h.add_edge(m + 1, m + 4);
        VerifyResult r = verify_certificate(h, *cert, vo);
        if (r.supported || !r.refutation) {
            detail = "corrupted certificate not refuted for m=" +
                     std::to_string(m);
            return false;
        }
        if (!r.refutation->valid_in(h) ||
            static_cast<int>(r.refutation->paths.size()) != cert->s.count()) {
            detail = "refutation witness invalid for m=" + std::to_string(m);
            return false;
        }
    }
    detail = std::to_string(supported) +
             " honest certificates supported with fresh seeds; all corrupted "
             "ones refuted with witness covers";
    return true;
}

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {1, "kernel size bound |V(G')| <= 3k", criterion_kernel_size},
        {2, "kernel preserves Hamiltonicity", criterion_kernel_equivalence},
        {3, "closure soundness and lift validity", criterion_closure_soundness},
        {4, "Dirac/Ore completeness via closure", criterion_dirac_ore},
        {5, "extend-or-independent disjunction", criterion_nash_williams},
        {6, "path cover vs exact oracle", criterion_pathcover_oracle},
        {7, "degree-relaxed end to end", criterion_degree_relaxed_end_to_end},
        {8, "n=5000 scaling smoke test", criterion_scaling},
        {9, "certificate round trip", criterion_certificate_roundtrip},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL",
                    c.id, c.name.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
