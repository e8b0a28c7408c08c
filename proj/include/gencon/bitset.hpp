#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gencon {

/// Fixed-size bit set sized at runtime. Used for resource masks in the
/// packing search, where sets are compared and intersected constantly.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    /// Calls f(i) for each set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
        return bits_;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.words_ <=> b.words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gencon
