#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ggc {

// Fixed-width packed bit array with word-level range append.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return test(i); }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(__builtin_popcountll(w));
        }
        return total;
    }

    // Bits [first, last) of `src` as a new vector.
    static BitVector slice(const BitVector &src, std::size_t first, std::size_t last) {
        BitVector out;
        out.append(src, first, last);
        return out;
    }

    // Appends bits [first, last) of `src` to the end of this vector.
    void append(const BitVector &src, std::size_t first, std::size_t last) {
        const std::size_t count = last - first;
        const std::size_t old = size_;
        resize(size_ + count);
        std::size_t i = 0;
        // Bit-by-bit until the destination is word-aligned.
        for (; i < count && ((old + i) & 63) != 0; ++i) {
            if (src.test(first + i)) {
                set(old + i);
            }
        }
        for (; i + 64 <= count; i += 64) {
            words_[(old + i) >> 6] = src.word_at(first + i);
        }
        for (; i < count; ++i) {
            if (src.test(first + i)) {
                set(old + i);
            }
        }
    }

    void append(const BitVector &src) { append(src, 0, src.size()); }

    void resize(std::size_t size) {
        words_.resize((size + 63) / 64, 0);
        if (size < size_ && (size & 63) != 0) {
            words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
        }
        size_ = size;
    }

    friend bool operator==(const BitVector &a, const BitVector &b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    // 64 bits starting at arbitrary bit position `pos` (must be in range).
    std::uint64_t word_at(std::size_t pos) const {
        const std::size_t w = pos >> 6;
        const unsigned shift = pos & 63;
        if (shift == 0) {
            return words_[w];
        }
        return (words_[w] >> shift) | (words_[w + 1] << (64 - shift));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ggc
