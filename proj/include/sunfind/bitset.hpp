#ifndef SUNFIND_BITSET_HPP
#define SUNFIND_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sunfind {

/// Fixed-capacity set of vertex indices backed by 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    std::size_t capacity() const { return capacity_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return ! none(); }

    bool intersects(const Bitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    std::size_t intersection_count(const Bitset & other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool is_subset_of(const Bitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    Bitset & operator&=(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    Bitset & operator|=(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Removes every member of `other`.
    Bitset & subtract(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }

    /// Smallest member >= from, or capacity() if there is none.
    std::size_t next(std::size_t from) const
    {
        if (from >= capacity_)
            return capacity_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return capacity_;
            w = words_[wi];
        }
    }
    std::size_t first() const { return next(0); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bitset &) const = default;

private:
    void trim()
    {
        if (capacity_ & 63)
            words_.back() &= (std::uint64_t{1} << (capacity_ & 63)) - 1;
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sunfind

#endif
