#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ham/bitset.hpp"

namespace ham {

// Thrown when an operation's contract is violated by its caller or when an
// internal invariant that the theory guarantees fails at runtime.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Refusal: the input exceeds a configured size cap. Not an answer.
class RefusedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertex ids 0..n-1, adjacency kept as one bitset
// row per vertex. Symmetric and irreflexive by construction. Treat as
// immutable once built; algorithms that need to add edges work on copies.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int vertex_count() const { return n_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop edge " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void remove_edge(int u, int v)
    {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    const Bitset& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }

    int min_degree() const
    {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    long long edge_count() const
    {
        long long m = 0;
        for (int v = 0; v < n_; ++v)
            m += degree(v);
        return m / 2;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    // Induced subgraph on the given vertex set. Kept vertices are renumbered
    // 0..k-1 in increasing original id; map_out (if given) receives the
    // new-id -> original-id map.
    Graph induced(const Bitset& keep, std::vector<int>* map_out = nullptr) const
    {
        std::vector<int> map = keep.to_vector();
        std::vector<int> inv(n_, -1);
        for (size_t i = 0; i < map.size(); ++i)
            inv[map[i]] = static_cast<int>(i);
        Graph g(static_cast<int>(map.size()));
        for (size_t i = 0; i < map.size(); ++i) {
            Bitset nb = adj_[map[i]] & keep;
            for (int v : nb)
                if (inv[v] > static_cast<int>(i))
                    g.add_edge(static_cast<int>(i), inv[v]);
        }
        if (map_out)
            *map_out = std::move(map);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

// A Hamiltonian cycle as a vertex order, interpreted cyclically.
using HamCycle = std::vector<int>;

// Every vertex exactly once and every consecutive pair (wrapping) an edge.
inline bool is_hamiltonian_cycle(const Graph& g, std::span<const int> order)
{
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n || n < 3)
        return false;
    Bitset seen(n);
    for (int v : order) {
        if (v < 0 || v >= n || seen.test(v))
            return false;
        seen.set(v);
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(order[i], order[(i + 1) % n]))
            return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const Bitset& s)
{
    for (int v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

// High-degree test at the rational threshold n/2: d(v) >= n/2, i.e.
// 2 d(v) >= n (ceil for odd n).
inline bool meets_half_degree(const Graph& g, int v)
{
    return 2 * g.degree(v) >= g.vertex_count();
}

} // namespace ham
