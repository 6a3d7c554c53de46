#pragma once

#include <cstdint>
#include <optional>

#include "ham/outcome.hpp"
#include "ham/pathcover.hpp"

namespace ham {

// Partition around an independent set A1 of size delta+1: A2 holds the
// vertices seeing at least delta/2 of A1, A3 the rest.
struct HaggkvistPartition {
    VertexSet a1, a2, a3;
};

HaggkvistPartition make_partition(const Graph& g, const VertexSet& a1);

struct DegreeRelaxedOptions {
    double epsilon = 1e-6;
    uint64_t seed = 0;
    int threads = 1;
    int exact_cap = 24;
};

// Full dispatch for the minimum-degree parameterization: 2-connectivity
// reject, Dirac branch, exact fallback for k >= n/34, otherwise
// extend-or-independent followed by the Haggkvist cut and the color-coding
// cover. Any violated theory assertion falls back to the exact solver
// rather than answering unverified.
SolveOutcome solve_degree_relaxed(const Graph& g, DegreeRelaxedOptions opt = {});

// Links a cover of G[T] by |S| paths into a Hamiltonian cycle of G, going
// through the bipartite-plus-paths graph B, its S-clique extension B', and
// the S-T closure B''.
HamCycle assemble_cycle(const Graph& g, const VertexSet& s, const PathCover& cover);

struct VerifyResult {
    bool supported = false;
    std::optional<PathCover> refutation; // a cover of T by |S| paths
    uint64_t trials_run = 0;
};

struct VerifyOptions {
    std::optional<uint64_t> seed; // default: derived from the certificate seed
    int threads = 1;
    bool exact = false;           // use the exact oracle when |T| <= 20
};

// Re-runs the cover search on G[T] with an independent seed. `supported`
// is one-sided Monte Carlo with error at most cert.epsilon (exact when
// opt.exact and T is small).
VerifyResult verify_certificate(const Graph& g, const CutCertificate& cert,
                                VerifyOptions opt = {});

} // namespace ham
