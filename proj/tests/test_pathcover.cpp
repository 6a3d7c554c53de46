#include <doctest.h>

#include <cmath>

#include "ham/pathcover.hpp"
#include "test_util.hpp"

using namespace ham;
using namespace ham::testutil;

TEST_CASE("t=0 covers by singletons on the first trial")
{
    Graph g = random_graph(9, 0.4, 11);
    TrialPlan plan{0, 1e-6, 42, 1};
    CoverOutcome r = cover_with_deficiency(g, 0, plan);
    REQUIRE(r.cover.has_value());
    CHECK(r.trials_run == 1);
    CHECK(r.cover->paths.size() == 9);
    for (const auto& p : r.cover->paths)
        CHECK(p.size() == 1);
}

TEST_CASE("star K_{1,3}: deficiency 2 works, deficiency 3 does not")
{
    Graph g = star(3);
    TrialPlan plan{0, 1e-6, 7, 1};
    CoverOutcome two = cover_with_deficiency(g, 2, plan);
    REQUIRE(two.cover.has_value());
    CHECK(two.cover->paths.size() == 2);
    CHECK(two.cover->valid_in(g));

    CoverOutcome three = cover_with_deficiency(g, 3, plan);
    CHECK(!three.cover.has_value()); // no Hamiltonian path through the center
}

TEST_CASE("deficiency bounds are enforced")
{
    Graph g = path_graph(4);
    TrialPlan plan{0, 1e-6, 1, 1};
    CHECK_THROWS_AS(cover_with_deficiency(g, -1, plan), std::invalid_argument);
    CHECK_THROWS_AS(cover_with_deficiency(g, 5, plan), std::invalid_argument);
    // t = n asks for zero paths over nonempty V
    CHECK(!cover_with_deficiency(g, 4, plan).cover.has_value());
}

TEST_CASE("DP base cases follow the recurrence")
{
    // single vertex: T[{c},v]=1 exactly when colored c
    Graph one(1);
    Coloring f;
    f.num_colors = 2;
    f.color = {0};
    auto hit = dp_single_coloring(one, f, 1);
    // one path covering one vertex has deficiency 0 < 1: T[X,v]=1 > |X|-t=0
    CHECK(!hit.has_value());

    // edge with distinct colors: the neighbor branch finds one path
    Graph e2(2);
    e2.add_edge(0, 1);
    Coloring f2;
    f2.num_colors = 2;
    f2.color = {0, 1};
    auto hit2 = dp_single_coloring(e2, f2, 1);
    REQUIRE(hit2.has_value());
    REQUIRE(hit2->nontrivial_paths.size() == 1);
    CHECK(hit2->nontrivial_paths[0].size() == 2);

    // same color on both endpoints: no colorful path, t=1 unreachable
    Coloring f3;
    f3.num_colors = 2;
    f3.color = {0, 0};
    CHECK(!dp_single_coloring(e2, f3, 1).has_value());
}

TEST_CASE("colorings are deterministic in (seed, index) and roughly uniform")
{
    TrialPlan plan{2, 1e-6, 42, 1};
    Coloring a = make_coloring(plan, 0, 20);
    Coloring b = make_coloring(plan, 0, 20);
    CHECK(a.color == b.color);
    Coloring c = make_coloring(plan, 1, 20);
    CHECK(a.color != c.color);

    // chi-square style check on one vertex across many trials: 2t = 4 colors,
    // each within 5 sigma of 1/4
    int counts[4] = {0, 0, 0, 0};
    const int samples = 10000;
    for (int i = 0; i < samples; ++i)
        ++counts[make_coloring(plan, i, 3).color[1]];
    double expect = samples / 4.0;
    double sigma = std::sqrt(samples * 0.25 * 0.75);
    for (int col = 0; col < 4; ++col)
        CHECK(std::abs(counts[col] - expect) < 5 * sigma);
}

TEST_CASE("trial budget matches the ceil(e^{2t} ln(1/eps)) rule")
{
    TrialPlan plan{2, 1e-6, 0, 1};
    CHECK(plan.trial_count() ==
          static_cast<uint64_t>(std::ceil(std::exp(4.0) * std::log(1e6))));
    plan.t = 0;
    CHECK(plan.trial_count() == 1);
}

TEST_CASE("found covers always validate and have exactly n-t paths")
{
    SplitMix64 seeds(6001);
    for (int i = 0; i < 120; ++i) {
        int n = 2 + rng_below(seeds, 11);
        Graph g = random_graph(n, 0.35, seeds());
        int t = rng_below(seeds, std::min(n, 4) + 1);
        TrialPlan plan{0, 1e-4, seeds(), 1};
        CoverOutcome r = cover_with_deficiency(g, t, plan);
        CAPTURE(i);
        if (r.cover) {
            REQUIRE(r.cover->valid_in(g));
            REQUIRE(static_cast<int>(r.cover->paths.size()) == n - t);
            // nontrivial paths stay within the 2t color budget
            int nontrivial_verts = 0;
            for (const auto& p : r.cover->paths)
                if (p.size() >= 2)
                    nontrivial_verts += static_cast<int>(p.size());
            REQUIRE(nontrivial_verts <= 2 * t);
        }
    }
}

TEST_CASE("agreement with the exact oracle at epsilon 1e-6")
{
    SplitMix64 seeds(6002);
    for (int i = 0; i < 80; ++i) {
        int n = 3 + rng_below(seeds, 10); // up to 12
        Graph g = random_graph(n, 0.3 + 0.05 * (i % 6), seeds());
        int t = std::min(n, rng_below(seeds, 5));
        auto oracle = exact_min_path_cover(g, Bitset::all(n));
        TrialPlan plan{0, 1e-6, seeds(), 1};
        CoverOutcome r = cover_with_deficiency(g, t, plan);
        CAPTURE(i);
        REQUIRE(r.cover.has_value() == (oracle.min_paths <= n - t));
    }
}

TEST_CASE("parallel trials return the same winner as sequential")
{
    Graph g = random_graph(12, 0.4, 99);
    TrialPlan seq{0, 1e-6, 1234, 1};
    TrialPlan par{0, 1e-6, 1234, 4};
    for (int t = 1; t <= 3; ++t) {
        CoverOutcome a = cover_with_deficiency(g, t, seq);
        CoverOutcome b = cover_with_deficiency(g, t, par);
        REQUIRE(a.cover.has_value() == b.cover.has_value());
        if (a.cover) {
            CHECK(a.success_trial == b.success_trial);
            CHECK(a.cover->paths == b.cover->paths);
        }
    }
}
