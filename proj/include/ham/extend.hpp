#pragma once

#include <variant>
#include <vector>

#include "ham/graph.hpp"

namespace ham {

// Working state of the cycle-extension procedure: a simple cycle as an
// ordered vertex sequence with a fixed orientation, plus a membership set.
struct CycleState {
    std::vector<int> order;
    Bitset on_cycle;

    static CycleState from_order(const Graph& g, std::vector<int> order);
    void validate(const Graph& g) const; // throws ContractViolation
};

// A simple path of length >= 3 that leaves the cycle at x_1 = verts.front(),
// re-enters at x_{t+1} = verts.back(), and is otherwise disjoint from it.
// t is the 1-based re-entry index along the cycle orientation after rotating
// the cycle to start at x_1.
struct EscapePath {
    std::vector<int> verts;
    int t = 0;
};

// Degree counters for the extension argument: for each of x_t, x_k, p_2,
// its neighbors among x_1..x_t, among x_{t+1}..x_k, and outside the cycle.
struct DegreeTriple {
    int up[3] = {0, 0, 0};
    int down[3] = {0, 0, 0};
    int out[3] = {0, 0, 0};
};

struct Extended {};
struct IndepSetFound {
    VertexSet set;
};
struct CycleComplete {};
using StepResult = std::variant<Extended, IndepSetFound, CycleComplete>;

// One extension step. Either grows state.order (strictly), reports the
// cycle Hamiltonian, or produces an independent set of size min_degree+1.
StepResult extend_step(const Graph& g, CycleState& state);

// Finds an escape path when the outside of the cycle is not independent,
// via the (u,v,w) construction and its 2-connectivity fallback.
EscapePath find_escape_path(const Graph& g, const CycleState& state);

// Requires: g 2-connected, 3*delta >= n+2, n >= 3. Grows cycles from a
// short BFS cycle until Hamiltonian, or stops with an independent set of
// size delta+1.
std::variant<HamCycle, VertexSet> find_cycle_or_indepset(const Graph& g);

} // namespace ham
