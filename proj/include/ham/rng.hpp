#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ham {

// SplitMix64; used to derive independent substreams from one master seed.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t operator()()
    {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline uint64_t mix_seed(uint64_t master, uint64_t stream)
{
    SplitMix64 sm(master ^ (0xa0761d6478bd642fULL * (stream + 1)));
    sm();
    return sm();
}

// std::uniform_int_distribution is not pinned across standard libraries, so
// bounded draws go through these helpers to keep runs reproducible.
template <class Rng> int rng_below(Rng& rng, int bound)
{
    return static_cast<int>(rng() % static_cast<uint64_t>(bound));
}

template <class Rng> bool rng_coin(Rng& rng, double p)
{
    return (rng() >> 11) * 0x1.0p-53 < p;
}

template <class Rng> void rng_shuffle(Rng& rng, std::vector<int>& v)
{
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[rng_below(rng, i + 1)]);
}

} // namespace ham
