// bitset.hpp - fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tritile {

class Bitset {
public:
    static constexpr int npos = -1;

    Bitset() = default;
    explicit Bitset(int n) : size_(n), blocks_((n + 63) / 64, 0) {}

    int size() const { return size_; }

    void set(int i) {
        assert(i >= 0 && i < size_);
        blocks_[i >> 6] |= (uint64_t{1} << (i & 63));
    }
    void reset(int i) {
        assert(i >= 0 && i < size_);
        blocks_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (blocks_[i >> 6] >> (i & 63)) & 1;
    }

    void set_all() {
        for (auto& b : blocks_) b = ~uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& b : blocks_) b = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t b : blocks_) c += std::popcount(b);
        return c;
    }
    bool any() const {
        for (uint64_t b : blocks_)
            if (b) return true;
        return false;
    }
    bool none() const { return !any(); }

    // popcount of (*this & other) without allocating
    int count_and(const Bitset& other) const {
        assert(size_ == other.size_);
        int c = 0;
        for (size_t k = 0; k < blocks_.size(); ++k)
            c += std::popcount(blocks_[k] & other.blocks_[k]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= o.blocks_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (size_t k = 0; k < blocks_.size(); ++k) blocks_[k] |= o.blocks_[k];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {  // set difference
        assert(size_ == o.size_);
        for (size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= ~o.blocks_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const = default;

    int find_first() const {
        for (size_t k = 0; k < blocks_.size(); ++k)
            if (blocks_[k]) return int(k * 64) + std::countr_zero(blocks_[k]);
        return npos;
    }
    int find_next(int i) const {
        ++i;
        if (i >= size_) return npos;
        size_t k = size_t(i) >> 6;
        uint64_t b = blocks_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (b) return int(k * 64) + std::countr_zero(b);
            if (++k == blocks_.size()) return npos;
            b = blocks_[k];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
        return out;
    }

    static Bitset from_vector(int n, const std::vector<int>& idx) {
        Bitset b(n);
        for (int i : idx) b.set(i);
        return b;
    }

private:
    void trim() {
        if (size_ & 63) blocks_.back() &= (~uint64_t{0} >> (64 - (size_ & 63)));
    }

    int size_ = 0;
    std::vector<uint64_t> blocks_;
};

}  // namespace tritile
