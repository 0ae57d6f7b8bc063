#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

// Element of the ambient value group: a fixed-rank vector of Q(sqrt2)
// scalars ordered lexicographically (words in a dictionary).
class LexVector {
public:
    LexVector() = default;
    explicit LexVector(int rank) : c_(static_cast<std::size_t>(rank)) {}
    explicit LexVector(std::vector<QuadExt> coords) : c_(std::move(coords)) {}

    static LexVector zero(int rank) { return LexVector(rank); }

    int rank() const { return static_cast<int>(c_.size()); }

    const QuadExt& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    QuadExt& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    const std::vector<QuadExt>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    // Sign under the lexicographic order: sign of the first nonzero entry.
    int signum() const {
        for (const auto& x : c_) {
            int s = x.signum();
            if (s != 0) return s;
        }
        return 0;
    }

    LexVector operator-() const {
        LexVector r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    LexVector& operator+=(const LexVector& o) {
        require_same_rank(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    LexVector& operator-=(const LexVector& o) {
        require_same_rank(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend LexVector operator+(LexVector a, const LexVector& b) { return a += b; }
    friend LexVector operator-(LexVector a, const LexVector& b) { return a -= b; }

    friend LexVector operator*(long k, LexVector v) {
        for (auto& x : v.c_) x = QuadExt(Rat(k)) * x;
        return v;
    }
    friend LexVector operator*(const QuadExt& k, LexVector v) {
        for (auto& x : v.c_) x = k * x;
        return v;
    }

    bool operator==(const LexVector&) const = default;

    std::strong_ordering operator<=>(const LexVector& o) const {
        require_same_rank(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            auto c = c_[i] <=> o.c_[i];
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    void require_same_rank(const LexVector& o) const {
        if (c_.size() != o.c_.size())
            throw LengthMismatch("lex vectors of rank " + std::to_string(c_.size()) +
                                 " and " + std::to_string(o.c_.size()));
    }

    std::vector<QuadExt> c_;
};

// Archimedean level: 1-based index of the first nonzero coordinate,
// rank + 1 for the zero vector.  level(u) < level(v) iff u dominates v
// multiplicatively (N|v| < |u| for every N).
inline int level(const LexVector& v) {
    for (int i = 0; i < v.rank(); ++i)
        if (!v[i].is_zero()) return i + 1;
    return v.rank() + 1;
}

// Convex (isolated) subgroup of the ambient lex group.  Every convex
// subgroup of a lexicographic power of an archimedean field is a level
// cut, so one integer describes it: the subgroup of all vectors whose
// level is >= cut_level.  cut_level = 1 is the whole group, rank + 1 the
// trivial one.
struct ConvexSubgroup {
    int cut_level = 1;

    bool contains(const LexVector& v) const { return level(v) >= cut_level; }
    bool is_trivial_for(int rank) const { return cut_level == rank + 1; }
    bool is_whole_group() const { return cut_level == 1; }

    bool operator==(const ConvexSubgroup&) const = default;
};

// Smallest convex subgroup containing every element of the span.
inline ConvexSubgroup convex_hull(std::span<const LexVector> s, int rank) {
    int cut = rank + 1;
    for (const auto& v : s) cut = std::min(cut, level(v));
    return ConvexSubgroup{cut};
}

// Quotient projection modulo a convex subgroup, realized inside the same
// ambient group by zeroing every coordinate at or past the cut.  This is
// an order-preserving group homomorphism with kernel delta.
inline LexVector project(const LexVector& v, ConvexSubgroup delta) {
    LexVector r = v;
    for (int i = delta.cut_level - 1; i < r.rank(); ++i) r[i] = QuadExt();
    return r;
}

inline std::string to_string(const LexVector& v) {
    std::string s = "(";
    for (int i = 0; i < v.rank(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace curvette
