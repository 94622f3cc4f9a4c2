#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bsl {

// Membership bit-vector over the packed elements 0 .. n-1 of a ring.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::uint32_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void insert(std::uint32_t x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    void erase(std::uint32_t x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept { return count() == 0; }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // set difference
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    bool intersects(const ElementSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & o.words_[k]) return true;
        }
        return false;
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

    // Members in increasing packed order.
    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int bit = std::countr_zero(w);
                out.push_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bsl
