#ifndef HTN_UTIL_BITSET_H
#define HTN_UTIL_BITSET_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace htn {

/// Fixed-width bit vector. The width is set at construction and every binary
/// operation requires both operands to have the same width.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size)
        : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i / word_bits] >> (i % word_bits)) & Word{1};
    }
    void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    void set(std::size_t i, bool value) { value ? set(i) : reset(i); }

    std::size_t count() const {
        std::size_t n = 0;
        for (Word w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool none() const {
        for (Word w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    bool is_subset_of(const Bitset &other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }
    bool intersects(const Bitset &other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    Bitset &operator|=(const Bitset &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    Bitset &operator&=(const Bitset &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    // this \ other
    Bitset &subtract(const Bitset &other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Calls f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                const int offset = std::countr_zero(bits);
                std::invoke(f, w * word_bits + static_cast<std::size_t>(offset));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&out](std::size_t i) { out.push_back(i); });
        return out;
    }

    const std::vector<Word> &words() const { return words_; }

    std::size_t hash() const {
        std::size_t h = size_;
        for (Word w : words_)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const Bitset &, const Bitset &) = default;
    friend auto operator<=>(const Bitset &, const Bitset &) = default;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace htn

template <>
struct std::hash<htn::Bitset> {
    std::size_t operator()(const htn::Bitset &b) const { return b.hash(); }
};

#endif
