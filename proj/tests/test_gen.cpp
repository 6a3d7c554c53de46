#include <doctest.h>

#include "ham/gen.hpp"
#include "test_util.hpp"

using namespace ham;
using namespace ham::testutil;

TEST_CASE("count-relaxed instances respect the degree-count bound")
{
    InstanceSpec spec{InstanceModel::count_relaxed, 12, 2, 7, false};
    Graph g = generate(spec).graph;
    int high = 0;
    for (int v = 0; v < 12; ++v)
        if (g.degree(v) >= 6)
            ++high;
    CHECK(high >= 10);
    CHECK(measure_count_k(g) <= 2);
}

TEST_CASE("degree-relaxed instances respect the minimum-degree bound")
{
    InstanceSpec spec{InstanceModel::degree_relaxed, 10, 0, 1, false};
    Graph g = generate(spec).graph;
    CHECK(g.min_degree() >= 5);
    CHECK(measure_degree_k(g) == 0);
}

TEST_CASE("generation is deterministic in the seed")
{
    InstanceSpec spec{InstanceModel::degree_relaxed, 10, 0, 1, false};
    CHECK(generate(spec).graph == generate(spec).graph);

    InstanceSpec p{InstanceModel::count_relaxed, 30, 3, 99, true};
    GeneratedInstance a = generate(p), b = generate(p);
    CHECK(a.graph == b.graph);
    REQUIRE(a.planted_cycle.has_value());
    CHECK(*a.planted_cycle == *b.planted_cycle);
}

TEST_CASE("planted cycles are real cycles")
{
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        InstanceSpec spec{InstanceModel::count_relaxed, 40, 4, seed, true};
        GeneratedInstance inst = generate(spec);
        REQUIRE(inst.planted_cycle.has_value());
        CHECK(is_hamiltonian_cycle(inst.graph, *inst.planted_cycle));

        InstanceSpec spec2{InstanceModel::degree_relaxed, 40, 2, seed, true};
        GeneratedInstance inst2 = generate(spec2);
        REQUIRE(inst2.planted_cycle.has_value());
        CHECK(is_hamiltonian_cycle(inst2.graph, *inst2.planted_cycle));
    }
}

TEST_CASE("invariants hold across a sweep of sizes and seeds")
{
    SplitMix64 seeds(4242);
    for (int i = 0; i < 120; ++i) {
        int n = 3 + rng_below(seeds, 60);
        int k = rng_below(seeds, n + 1);
        InstanceSpec spec;
        spec.model = (i % 2) ? InstanceModel::count_relaxed
                             : InstanceModel::degree_relaxed;
        spec.n = n;
        spec.k = k;
        spec.seed = seeds();
        spec.planted = i % 3 == 0;
        CAPTURE(n);
        CAPTURE(k);
        Graph g = generate(spec).graph;
        if (spec.model == InstanceModel::count_relaxed)
            REQUIRE(measure_count_k(g) <= k);
        else
            REQUIRE(measure_degree_k(g) <= k);
    }
}

TEST_CASE("bad specs are rejected")
{
    InstanceSpec spec{InstanceModel::count_relaxed, 2, 0, 1, false};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec = {InstanceModel::degree_relaxed, 10, -1, 1, false};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec = {InstanceModel::degree_relaxed, 10, 11, 1, false};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}
