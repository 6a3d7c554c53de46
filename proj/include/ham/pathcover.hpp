#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ham/exact.hpp" // PathCover
#include "ham/graph.hpp"

namespace ham {

// A 2t-coloring of the vertices, derived deterministically from
// (master_seed, trial index).
struct Coloring {
    std::vector<uint8_t> color; // values in [0, 2t)
    int num_colors = 0;
};

// Monte-Carlo budget: enough random colorings to miss an existing cover
// with probability at most epsilon. A coloring is good for a fixed cover
// with probability >= e^{-2t}, so ceil(e^{2t} ln(1/eps)) trials suffice.
struct TrialPlan {
    int t = 0;
    double epsilon = 1e-6;
    uint64_t master_seed = 0;
    int threads = 1;

    uint64_t trial_count() const;
};

Coloring make_coloring(const TrialPlan& plan, uint64_t trial_index, int n);

// Subset DP over color sets for one coloring. T[X,v] = least q such that q
// vertex-disjoint paths use exactly the colors X (each once) with the last
// path ending at v. Success when T[X,v] <= |X| - t for some state.
struct DpSuccess {
    std::vector<std::vector<int>> nontrivial_paths; // reconstructed, disjoint
};
std::optional<DpSuccess> dp_single_coloring(const Graph& g, const Coloring& f,
                                            int t);

struct CoverOutcome {
    std::optional<PathCover> cover;  // exactly n-t paths when found
    uint64_t trials_run = 0;
    uint64_t success_trial = 0;      // meaningful when cover is set
};

// Cover of all of V(G) by exactly n-t vertex-disjoint paths, or not-found.
// not-found is one-sided: if a cover exists it was missed with probability
// at most plan.epsilon.
CoverOutcome cover_with_deficiency(const Graph& g, int t, const TrialPlan& plan);

} // namespace ham
