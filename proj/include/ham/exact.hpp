#pragma once

#include <optional>
#include <vector>

#include "ham/graph.hpp"

namespace ham {

// Bellman/Held-Karp bitmask DP with vertex 0 as anchor. The flat table
// costs 2^n * 4 bytes, hence the cap; reconstruction walks the table
// backwards (lowest-id predecessor), so cycles come out deterministically.
struct HeldKarpOptions {
    int cap = 24;
};
std::optional<HamCycle> held_karp(const Graph& g, HeldKarpOptions opt = {});

// Exhaustive backtracking over paths anchored at vertex 0. Test oracle.
struct BruteForceOptions {
    int cap = 11;
};
std::optional<HamCycle> brute_force(const Graph& g, BruteForceOptions opt = {});

// Inclusion-exclusion count of undirected Hamiltonian cycles in polynomial
// space: sum over S subseteq V\{0} of (-1)^|S| * closed n-walks at 0 avoiding
// S, halved. Counts are 128-bit; overflow raises.
struct IeCountOptions {
    int cap = 28;
};
class CountOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
unsigned long long ie_count(const Graph& g, IeCountOptions opt = {});

// Vertex-disjoint paths using target vertices only (paths live in
// G[targets]); singleton paths allowed.
struct PathCover {
    std::vector<std::vector<int>> paths;
    VertexSet covered;

    bool valid_in(const Graph& g) const;
};

struct MinPathCoverResult {
    int min_paths = 0;
    PathCover witness;
};

// Exact DP over (subset of targets, last vertex); oracle for the color-coding
// cover. |targets| <= 20.
MinPathCoverResult exact_min_path_cover(const Graph& g, const Bitset& targets);

} // namespace ham
