#include "ham/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace ham {

HighLowSplit split_high_low(const Graph& g)
{
    int n = g.vertex_count();
    HighLowSplit s{Bitset(n), Bitset(n)};
    for (int v = 0; v < n; ++v) {
        if (meets_half_degree(g, v))
            s.high.set(v);
        else
            s.low.set(v);
    }
    return s;
}

namespace {

// Bipartite graph H: left side C (original ids), right side two slots per
// S-vertex, addressed as 2*si + which with si the rank of v in S.
struct AuxBipartite {
    std::vector<int> s_ids;           // S in increasing id
    std::vector<int> s_rank;          // original id -> rank in s_ids, or -1
    const Graph* g;
    const Bitset* c_set;

    Bitset left_neighbors(int slot) const // H-neighbors of a right slot
    {
        Bitset nb = g->neighbors(s_ids[slot / 2]);
        nb &= *c_set;
        return nb;
    }
};

struct Matching {
    std::vector<int> of_left;  // original C id -> right slot, or -1
    std::vector<int> of_right; // right slot -> original C id, or -1
};

// Hungarian-style augmentation, one BFS per free right slot in slot order.
// BFS expands left neighbors in increasing id; the first free left vertex
// reached ends the search.
Matching max_matching(const AuxBipartite& h)
{
    int n = h.g->vertex_count();
    int slots = static_cast<int>(h.s_ids.size()) * 2;
    Matching m;
    m.of_left.assign(n, -1);
    m.of_right.assign(slots, -1);

    std::vector<int> parent_slot(n);     // left vertex -> slot it was reached from
    std::vector<char> seen_left(n);
    std::vector<int> prev_left(slots);   // slot -> saturated left vertex before it

    for (int start = 0; start < slots; ++start) {
        std::fill(seen_left.begin(), seen_left.end(), 0);
        std::deque<int> queue{start};
        prev_left[start] = -1;
        int found = -1;
        while (!queue.empty() && found < 0) {
            int slot = queue.front();
            queue.pop_front();
            for (int c : h.left_neighbors(slot)) {
                if (seen_left[c])
                    continue;
                seen_left[c] = 1;
                parent_slot[c] = slot;
                if (m.of_left[c] < 0) {
                    found = c;
                    break;
                }
                prev_left[m.of_left[c]] = c;
                queue.push_back(m.of_left[c]);
            }
        }
        if (found < 0)
            continue;
        // flip the alternating path back to `start`
        int c = found;
        while (c >= 0) {
            int slot = parent_slot[c];
            int next_c = prev_left[slot];
            m.of_left[c] = slot;
            m.of_right[slot] = c;
            c = next_c;
        }
    }
    return m;
}

// Vertices reachable from the unsaturated C-vertices by M-alternating paths:
// left-to-right over non-matching edges, right-to-left over matching edges.
void alternating_reachability(const AuxBipartite& h, const Matching& m,
                              Bitset& r_c, Bitset& r_sprime)
{
    int n = h.g->vertex_count();
    int slots = static_cast<int>(h.s_ids.size()) * 2;
    r_c = Bitset(n);
    r_sprime = Bitset(slots);

    std::deque<int> queue; // left vertices, original ids
    for (int c : *h.c_set)
        if (m.of_left[c] < 0) {
            r_c.set(c);
            queue.push_back(c);
        }
    // right slots are only entered over non-matching edges; precompute
    // left-rows once per S-vertex
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        Bitset nb = h.g->neighbors(c);
        nb.andnot_with(*h.c_set);
        for (int v : nb) {
            int rank = h.s_rank[v];
            if (rank < 0)
                continue;
            for (int which = 0; which < 2; ++which) {
                int slot = 2 * rank + which;
                if (m.of_left[c] == slot)
                    continue; // matching edge: wrong direction
                if (r_sprime.test(slot))
                    continue;
                r_sprime.set(slot);
                int back = m.of_right[slot];
                if (back >= 0 && !r_c.test(back)) {
                    r_c.set(back);
                    queue.push_back(back);
                }
            }
        }
    }
}

void check_matching_properties(const AuxBipartite& h, const Matching& m,
                               const Bitset& r_c,
                               const Bitset& r_sprime)
{
    int slots = static_cast<int>(h.s_ids.size()) * 2;
    for (int slot = 0; slot < slots; ++slot) {
        if (r_sprime.test(slot)) {
            // reachable right slots are saturated, into reachable C
            if (m.of_right[slot] < 0)
                throw ContractViolation("kernel: reachable S' slot unsaturated");
            if (!r_c.test(m.of_right[slot]))
                throw ContractViolation("kernel: matched partner not in R_C");
        } else {
            // unreachable right slots see only saturated, unreachable C
            for (int c : h.left_neighbors(slot)) {
                if (r_c.test(c))
                    throw ContractViolation("kernel: unreachable S' slot sees R_C");
                if (m.of_left[c] < 0)
                    throw ContractViolation(
                        "kernel: unreachable S' slot sees unsaturated C");
            }
        }
        // the two representatives behave alike
        if (r_sprime.test(slot) != r_sprime.test(slot ^ 1))
            throw ContractViolation("kernel: S' copies differ on reachability");
    }
    // neighbors of reachable C-vertices are all reachable
    for (int c : r_c) {
        Bitset nb = h.g->neighbors(c);
        nb.andnot_with(*h.c_set);
        for (int v : nb) {
            int rank = h.s_rank[v];
            if (rank >= 0 &&
                !(r_sprime.test(2 * rank) && r_sprime.test(2 * rank + 1)))
                throw ContractViolation("kernel: N_H(R_C) escapes R_S'");
        }
    }
}

} // namespace

KernelResult kernelize(const Graph& g, const HighLowSplit& split)
{
    int n = g.vertex_count();
    const Bitset& c_set = split.high;
    const Bitset& s_set = split.low;
    int s_count = s_set.count();
    int c_count = c_set.count();
    if (s_count == 0)
        throw ContractViolation("kernelize: S must be nonempty");
    for (int c : c_set) {
        Bitset rest = c_set;
        rest.reset(c);
        if (!rest.is_subset_of(g.neighbors(c)))
            throw ContractViolation("kernelize: G[C] is not a clique");
    }

    KernelResult res;
    if (c_count <= 2 * s_count) {
        res.identity = true;
        res.g_prime = g;
        res.vertex_map.resize(n);
        for (int v = 0; v < n; ++v)
            res.vertex_map[v] = v;
        res.c_prime = c_set;
        res.r_c = Bitset(n);
        return res;
    }

    AuxBipartite h;
    h.g = &g;
    h.c_set = &c_set;
    h.s_ids = s_set.to_vector();
    h.s_rank.assign(n, -1);
    for (size_t i = 0; i < h.s_ids.size(); ++i)
        h.s_rank[h.s_ids[i]] = static_cast<int>(i);

    Matching m = max_matching(h);
    alternating_reachability(h, m, res.r_c, res.r_sprime);
    check_matching_properties(h, m, res.r_c, res.r_sprime);

    // C* = saturated C-vertices, padded to |S|+1 with the lowest-id
    // unsaturated ones if the matching was small
    Bitset c_star(n);
    int c_star_count = 0;
    for (int c : c_set)
        if (m.of_left[c] >= 0) {
            c_star.set(c);
            ++c_star_count;
        }
    Bitset c_prime_orig = c_star;
    if (c_star_count < s_count + 1) {
        for (int c : c_set) {
            if (c_star_count >= s_count + 1)
                break;
            if (!c_prime_orig.test(c)) {
                c_prime_orig.set(c);
                ++c_star_count;
            }
        }
    }

    Bitset keep = c_prime_orig | s_set;
    res.g_prime = g.induced(keep, &res.vertex_map);
    res.c_prime = Bitset(res.g_prime.vertex_count());
    for (int i = 0; i < res.g_prime.vertex_count(); ++i)
        if (c_prime_orig.test(res.vertex_map[i]))
            res.c_prime.set(i);

    for (int slot = 0; slot < static_cast<int>(h.s_ids.size()) * 2; ++slot)
        if (m.of_right[slot] >= 0)
            res.matching.push_back({m.of_right[slot], h.s_ids[slot / 2], slot % 2});

    // Size bound: |C'| <= 2|S| since C* is matched into S' of size 2|S|.
    if (res.g_prime.vertex_count() > 3 * s_count)
        throw ContractViolation("kernel exceeds 3|S| vertices");
    return res;
}

HamCycle lift_kernel_cycle(const Graph& g, const KernelResult& result,
                           const HamCycle& kernel_cycle)
{
    if (!is_hamiltonian_cycle(result.g_prime, kernel_cycle))
        throw ContractViolation("lift_kernel_cycle: cycle invalid in kernel");

    int kn = result.g_prime.vertex_count();
    HamCycle mapped(kn);
    for (int i = 0; i < kn; ++i)
        mapped[i] = result.vertex_map[kernel_cycle[i]];

    int n = g.vertex_count();
    Bitset kept(n);
    for (int v : result.vertex_map)
        kept.set(v);
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
        if (!kept.test(v))
            removed.push_back(v);
    if (removed.empty())
        return mapped;

    // two consecutive surviving clique vertices exist because |C'| > |S|
    int cut = -1;
    for (int i = 0; i < kn; ++i) {
        if (result.c_prime.test(kernel_cycle[i]) &&
            result.c_prime.test(kernel_cycle[(i + 1) % kn])) {
            cut = i;
            break;
        }
    }
    if (cut < 0)
        throw ContractViolation(
            "lift_kernel_cycle: no consecutive C'-C' pair on the kernel cycle");

    HamCycle out;
    out.reserve(n);
    for (int i = 0; i <= cut; ++i)
        out.push_back(mapped[i]);
    for (int v : removed)
        out.push_back(v);
    for (int i = cut + 1; i < kn; ++i)
        out.push_back(mapped[i]);
    if (!is_hamiltonian_cycle(g, out))
        throw ContractViolation("lift_kernel_cycle: lifted cycle invalid");
    return out;
}

SolveOutcome solve_count_relaxed(const Graph& g, CountRelaxedOptions opt)
{
    int n = g.vertex_count();
    if (n < 3)
        return SolveOutcome::no(TooSmallCert{});

    HighLowSplit split = split_high_low(g);

    if (split.low.empty())
        return SolveOutcome::yes(complete_closure_cycle(g)); // Dirac regime

    ClosureResult cl = augment(g, EdgeFilter::within(split.high));
    KernelResult kr = kernelize(cl.closed, split);
    if (kr.g_prime.vertex_count() > opt.held_karp_cap)
        throw RefusedError(
            "kernel has " + std::to_string(kr.g_prime.vertex_count()) +
            " vertices, above the exact-solver cap " +
            std::to_string(opt.held_karp_cap) +
            "; use --force or another strategy");

    auto hk = held_karp(kr.g_prime, {opt.held_karp_cap});
    if (!hk)
        return SolveOutcome::no(KernelCert{kr.g_prime, kr.vertex_map});

    HamCycle in_closed = lift_kernel_cycle(cl.closed, kr, *hk);
    return SolveOutcome::yes(lift_cycle(g, cl.log, std::move(in_closed)));
}

} // namespace ham
