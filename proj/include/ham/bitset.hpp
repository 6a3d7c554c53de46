#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ham {

// Fixed-capacity set of vertex ids 0..n-1, packed into 64-bit words.
// All pairwise operations require equal capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0)
    {
    }

    static Bitset all(int nbits)
    {
        Bitset b(nbits);
        for (int w = 0; w < static_cast<int>(b.words_.size()); ++w)
            b.words_[w] = ~uint64_t{0};
        b.trim();
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const
    {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (uint64_t w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (uint64_t w : words_)
            if (w)
                return false;
        return true;
    }

    bool intersects(const Bitset& o) const
    {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    int intersect_count(const Bitset& o) const
    {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool is_subset_of(const Bitset& o) const
    {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    // this \ o
    Bitset& andnot_with(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset operator&(const Bitset& o) const
    {
        Bitset r = *this;
        r &= o;
        return r;
    }
    Bitset operator|(const Bitset& o) const
    {
        Bitset r = *this;
        r |= o;
        return r;
    }
    Bitset complement() const
    {
        Bitset r = *this;
        for (auto& w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Bitset&) const = default;

    // First set bit, or -1.
    int first() const
    {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        return -1;
    }

    // First set bit strictly after i, or -1.
    int next(int i) const
    {
        ++i;
        if (i >= nbits_)
            return -1;
        size_t w = static_cast<size_t>(i) >> 6;
        uint64_t cur = words_[w] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (cur)
                return static_cast<int>(w * 64) + std::countr_zero(cur);
            if (++w >= words_.size())
                return -1;
            cur = words_[w];
        }
    }

    struct iterator {
        const Bitset* bs;
        int v;
        int operator*() const { return v; }
        iterator& operator++()
        {
            v = bs->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this)
            out.push_back(v);
        return out;
    }

private:
    void trim()
    {
        int rem = nbits_ & 63;
        if (rem && !words_.empty())
            words_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

using VertexSet = Bitset;

} // namespace ham
