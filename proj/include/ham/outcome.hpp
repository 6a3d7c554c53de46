#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ham/graph.hpp"

namespace ham {

// --- machine-verifiable non-Hamiltonicity certificates ---

// n < 3: no cycle can exist.
struct TooSmallCert {};

// Removing this vertex disconnects the graph.
struct CutVertexCert {
    int vertex;
};

// The graph is disconnected; `component` is a proper nonempty part with no
// outgoing edges.
struct DisconnectedCert {
    VertexSet component;
};

// Equivalent reduced instance on which an exact solver answered "no"
// (re-checkable by solving the kernel again).
struct KernelCert {
    Graph kernel;
    std::vector<int> vertex_map; // kernel id -> original id
};

// An exact solver enumerated all options directly.
struct ExhaustiveCert {
    std::string method;
};

// Cut (S,T): G[T] admits no cover by |S| vertex-disjoint paths. The path
// cover search is one-sided Monte Carlo; `epsilon` bounds the probability
// that a cover was missed, `seed` reproduces the run.
struct CutCertificate {
    VertexSet s;
    int deficiency = 0; // |T| - |S|
    double epsilon = 0;
    uint64_t seed = 0;
};

using Certificate = std::variant<TooSmallCert, CutVertexCert, DisconnectedCert,
                                 KernelCert, ExhaustiveCert, CutCertificate>;

struct SolveOutcome {
    bool hamiltonian = false;
    std::optional<HamCycle> cycle;           // set iff hamiltonian
    std::optional<Certificate> certificate;  // set iff not

    static SolveOutcome yes(HamCycle c)
    {
        SolveOutcome o;
        o.hamiltonian = true;
        o.cycle = std::move(c);
        return o;
    }
    static SolveOutcome no(Certificate c)
    {
        SolveOutcome o;
        o.certificate = std::move(c);
        return o;
    }
};

} // namespace ham
