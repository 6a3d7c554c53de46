#pragma once

#include <optional>

#include "ham/graph.hpp"

namespace ham {

// Result of the 2-connectivity test. A graph is 2-connected when it is
// connected, has at least 3 vertices, and stays connected after removing any
// single vertex. On failure exactly one witness field is populated.
struct TwoConnectivity {
    bool two_connected = false;
    bool too_small = false;                // n < 3
    std::optional<int> cut_vertex;         // an articulation vertex
    std::optional<VertexSet> component;    // one side of a disconnection

    explicit operator bool() const { return two_connected; }
};

TwoConnectivity is_two_connected(const Graph& g);

// Connectivity of the subgraph induced on `alive` (used by the brute-force
// oracle in tests and by witness construction).
bool is_connected_within(const Graph& g, const Bitset& alive);

} // namespace ham
