#pragma once

#include <cstdint>
#include <vector>

namespace indexcoding {

/// Fixed-size bitset sized at runtime. Adjacency rows of confusion graphs are
/// stored as these so pairwise scans stay word-parallel.
class DynBitset {
public:
    DynBitset() : size_(0) {}
    explicit DynBitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    void set(int i) { words_[i >> 6] |= (uint64_t(1) << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool intersects(const DynBitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    DynBitset& and_not(const DynBitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// First set bit at or after 'from'; -1 when none.
    int find_next(int from) const {
        if (from >= size_) return -1;
        int w = from >> 6;
        uint64_t cur = words_[w] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                int bit = (w << 6) + __builtin_ctzll(cur);
                return bit < size_ ? bit : -1;
            }
            if (++w >= (int)words_.size()) return -1;
            cur = words_[w];
        }
    }
    int find_first() const { return find_next(0); }

private:
    int size_;
    std::vector<uint64_t> words_;
};

}  // namespace indexcoding
