#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hgp {

// Dense bit vector over GF(2). XOR is the group operation; weight() is the
// Hamming weight. Bits past size() are kept zero so that word-level
// operations stay consistent.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int64_t n) : len_(n), words_((n + 63) / 64, 0) {}

    int64_t size() const { return len_; }

    bool get(int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int64_t i, bool v) {
        uint64_t mask = 1ULL << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(int64_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    int64_t weight() const {
        int64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVec xor: length mismatch");
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec& o) const = default;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    // Indices of set bits, ascending.
    std::vector<int64_t> ones() const {
        std::vector<int64_t> out;
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                out.push_back(static_cast<int64_t>(w) * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

private:
    int64_t len_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace hgp
