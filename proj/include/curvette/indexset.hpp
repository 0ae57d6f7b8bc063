#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace curvette {

// Small set of 1-based coordinate indices (bitmask; coordinates <= 32).
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> js) {
        for (int j : js) insert(j);
    }

    static IndexSet full(int n) {
        IndexSet s;
        s.bits_ = (n >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
        return s;
    }
    static IndexSet from_bits(std::uint32_t bits) {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    std::uint32_t bits() const { return bits_; }

    void insert(int j) { bits_ |= bit(j); }
    void erase(int j) { bits_ &= ~bit(j); }
    bool contains(int j) const { return (bits_ & bit(j)) != 0; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }

    bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool disjoint_with(IndexSet o) const { return (bits_ & o.bits_) == 0; }

    friend IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }

    bool operator==(const IndexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
            v.push_back(__builtin_ctz(rest) + 1);
        return v;
    }

    // Invokes fn on every subset (including the empty one and the set itself).
    template <typename Fn>
    void for_each_subset(Fn&& fn) const {
        std::uint32_t sub = bits_;
        while (true) {
            fn(from_bits(sub));
            if (sub == 0) break;
            sub = (sub - 1) & bits_;
        }
    }

private:
    static std::uint32_t bit(int j) { return std::uint32_t{1} << (j - 1); }

    std::uint32_t bits_ = 0;
};

}  // namespace curvette
