#pragma once

#include <vector>

#include "ham/closure.hpp"
#include "ham/exact.hpp"
#include "ham/outcome.hpp"

namespace ham {

// Partition of V at the n/2 degree threshold.
struct HighLowSplit {
    VertexSet high; // C: degree >= n/2
    VertexSet low;  // S: the rest
};

HighLowSplit split_high_low(const Graph& g);

// Reduction of a graph whose complement-of-clique part S is small to an
// equivalent induced subgraph on at most 3|S| vertices. The auxiliary
// bipartite graph pairs each clique vertex with two representatives per
// S-vertex; its maximum matching decides which clique vertices survive.
struct KernelResult {
    Graph g_prime;
    std::vector<int> vertex_map;     // kernel id -> original id
    VertexSet c_prime;               // kernel ids of surviving clique vertices
    bool identity = false;           // |C| <= 2|S|: nothing was removed

    // matching in the auxiliary graph, original ids; side encodes which of
    // the two S'-representatives: (c, v, which in {0,1})
    struct MatchEdge {
        int c;
        int v;
        int which;
    };
    std::vector<MatchEdge> matching;

    // alternating-path reachability from the unsaturated clique vertices
    VertexSet r_c;                   // original ids within C
    VertexSet r_sprime;              // slots 2*rank(v)+which over S in id order
};

// Requires S nonempty and G[C] complete (run augment(g, within C) first).
KernelResult kernelize(const Graph& g, const HighLowSplit& split);

// Re-inserts the removed clique vertices into a kernel cycle: find two
// consecutive C'-vertices (one exists since |C'| > |S|) and thread C \ C'
// between them. Valid in the clique-completed graph.
HamCycle lift_kernel_cycle(const Graph& g, const KernelResult& result,
                           const HamCycle& kernel_cycle);

struct CountRelaxedOptions {
    int held_karp_cap = 24;
};

// Full pipeline: split, complete C via closure, kernelize, solve the kernel
// exactly, lift the cycle back through the kernel and the closure log.
SolveOutcome solve_count_relaxed(const Graph& g, CountRelaxedOptions opt = {});

} // namespace ham
