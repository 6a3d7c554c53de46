#pragma once

#include <utility>
#include <vector>

#include "ham/graph.hpp"

namespace ham {

// Restricts which vertex pairs the augmentation step may connect.
class EdgeFilter {
public:
    static EdgeFilter all_pairs() { return EdgeFilter{}; }
    static EdgeFilter within(VertexSet set)
    {
        EdgeFilter f;
        f.kind_ = Kind::within;
        f.a_ = std::move(set);
        return f;
    }
    static EdgeFilter between(VertexSet s, VertexSet t)
    {
        EdgeFilter f;
        f.kind_ = Kind::between;
        f.a_ = std::move(s);
        f.b_ = std::move(t);
        return f;
    }

    bool allows(int u, int v) const
    {
        switch (kind_) {
        case Kind::all:
            return true;
        case Kind::within:
            return a_.test(u) && a_.test(v);
        case Kind::between:
            return (a_.test(u) && b_.test(v)) || (a_.test(v) && b_.test(u));
        }
        return false;
    }

    // Vertices that may partner with u (u's own membership already checked).
    VertexSet partners(int u, int n) const
    {
        switch (kind_) {
        case Kind::all:
            return Bitset::all(n);
        case Kind::within:
            return a_.test(u) ? a_ : Bitset(n);
        case Kind::between:
            if (a_.test(u))
                return b_;
            if (b_.test(u))
                return a_;
            return Bitset(n);
        }
        return Bitset(n);
    }

private:
    enum class Kind { all, within, between };
    Kind kind_ = Kind::all;
    VertexSet a_, b_;
};

// Edges added by Bondy-Chvatal steps, in insertion order. Entry i was a
// non-adjacent pair with current-degree sum >= n in the graph holding
// entries 0..i-1.
using AugmentationLog = std::vector<std::pair<int, int>>;

struct ClosureResult {
    Graph closed;
    AugmentationLog log;
};

// Repeatedly adds any filtered non-adjacent pair whose current degree sum is
// at least n, until none exists. Scan order (and hence the log) is pinned:
// a FIFO queue of dirty vertices seeded 0..n-1, partners scanned in
// increasing id.
ClosureResult augment(const Graph& g, const EdgeFilter& filter);

// Undo the augmentation: converts a Hamiltonian cycle of (original + log)
// into one of the original graph by processing log entries in reverse and
// re-splicing the cycle around each removed edge (rotation via the
// pigeonhole guarantee of the degree condition).
HamCycle lift_cycle(const Graph& original, const AugmentationLog& log,
                    HamCycle cycle);

// Dirac/Ore route: the all-pairs closure must reach the complete graph
// (throws otherwise); any vertex order is a cycle there and lifts back.
HamCycle complete_closure_cycle(const Graph& g);

} // namespace ham
