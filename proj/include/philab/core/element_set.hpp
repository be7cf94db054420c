#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace philab {

/// Index of an element in a finite ring or module carrier.
using Elem = std::uint32_t;

/// Membership bitmap over the element indices 0..size-1.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static ElementSet full(std::size_t size) {
        ElementSet s(size);
        for (std::size_t i = 0; i < size; ++i) s.insert(static_cast<Elem>(i));
        return s;
    }

    std::size_t universe() const { return size_; }

    bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
    void insert(Elem x) { words_[x >> 6] |= (std::uint64_t{1} << (x & 63)); }
    void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    bool is_subset_of(const ElementSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

    ElementSet complement() const {
        ElementSet out(size_);
        for (std::size_t i = 0; i < size_; ++i)
            if (!contains(static_cast<Elem>(i))) out.insert(static_cast<Elem>(i));
        return out;
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int tz = std::countr_zero(bits);
                out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(tz)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const ElementSet& o) const = default;

    /// Orders by cardinality first, then by the sorted element list. Used to
    /// make ideal lists and witness choices deterministic.
    std::strong_ordering operator<=>(const ElementSet& o) const {
        if (auto c = count() <=> o.count(); c != 0) return c;
        const auto a = elements();
        const auto b = o.elements();
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace philab
