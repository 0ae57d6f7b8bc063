#pragma once

// Independent oracles and generators for the property suites.  Nothing
// here may call into the decision procedures it is used to check: the
// equivalence oracle enumerates sign tables directly, and the scalewise
// oracle uses fraction-free integer elimination instead of the library's
// rational echelon.

#include <cstdint>
#include <span>
#include <vector>

#include "curvette/lexvec.hpp"
#include "curvette/relations.hpp"
#include "curvette/sampler.hpp"
#include "curvette/scalars.hpp"

namespace curvette::testing {

// Sign of sum m_j a_j for every m in the box |m_i| <= box, in a fixed
// enumeration order.
inline std::vector<int> sign_table(std::span<const LexVector> tuple, int box = 3) {
    std::vector<int> table;
    if (tuple.empty()) return table;
    const int len = static_cast<int>(tuple.size());
    const int rank = tuple.front().rank();
    std::vector<int> m(static_cast<std::size_t>(len), -box);
    while (true) {
        LexVector sum = LexVector::zero(rank);
        for (int j = 0; j < len; ++j)
            sum += static_cast<long>(m[static_cast<std::size_t>(j)]) * tuple[static_cast<std::size_t>(j)];
        table.push_back(sum.signum());
        int k = 0;
        while (k < len && m[static_cast<std::size_t>(k)] == box) {
            m[static_cast<std::size_t>(k)] = -box;
            ++k;
        }
        if (k == len) break;
        ++m[static_cast<std::size_t>(k)];
    }
    return table;
}

inline bool order_equivalent_oracle(std::span<const LexVector> a, std::span<const LexVector> b,
                                    int box = 3) {
    return sign_table(a, box) == sign_table(b, box);
}

// Fraction-free Gaussian elimination over the integers; returns the
// pivot columns of the row echelon form (leftmost-pivot convention).
inline std::vector<int> integer_pivots(std::vector<std::vector<BigInt>> rows, int width) {
    std::vector<int> pivots;
    std::size_t next_row = 0;
    for (int col = 0; col < width && next_row < rows.size(); ++col) {
        std::size_t piv = next_row;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[next_row]);
        const std::vector<BigInt> pivot_row = rows[next_row];
        const BigInt& p = pivot_row[static_cast<std::size_t>(col)];
        for (std::size_t r = next_row + 1; r < rows.size(); ++r) {
            const BigInt f = rows[r][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < width; ++j)
                rows[r][static_cast<std::size_t>(j)] =
                    rows[r][static_cast<std::size_t>(j)] * p - f * pivot_row[static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

// Clears denominators of the interleaved rational components of v.
inline std::vector<BigInt> integer_components(const LexVector& v) {
    std::vector<Rat> split = split_components(v);
    BigInt lcm = 1;
    for (const auto& x : split) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<BigInt> out;
    out.reserve(split.size());
    for (const auto& x : split) out.push_back(BigInt(numerator(x) * (lcm / denominator(x))));
    return out;
}

inline int integer_rank(const std::vector<std::vector<BigInt>>& rows, int width) {
    return static_cast<int>(integer_pivots(rows, width).size());
}

// Direct rank-per-slice oracle for scalewise independence.
inline bool scalewise_oracle(std::span<const LexVector> a) {
    if (a.empty()) return true;
    const int rank = a.front().rank();
    for (const auto& v : a)
        if (v.is_zero()) return false;

    std::vector<std::vector<BigInt>> all_rows;
    for (const auto& v : a) all_rows.push_back(integer_components(v));
    std::vector<int> levels;
    for (int piv : integer_pivots(all_rows, 2 * rank)) {
        int lev = piv / 2 + 1;
        if (levels.empty() || levels.back() != lev) levels.push_back(lev);
    }

    for (std::size_t q = 0; q < levels.size(); ++q) {
        int from = levels[q];
        int to = (q + 1 < levels.size()) ? levels[q + 1] : rank + 1;
        std::vector<std::vector<BigInt>> slice;
        int count = 0;
        for (const auto& v : a) {
            if (level(v) != from) continue;
            LexVector sub(to - from);
            for (int i = from - 1; i < to - 1; ++i) sub[i - (from - 1)] = v[i];
            slice.push_back(integer_components(sub));
            ++count;
        }
        if (integer_rank(slice, 2 * (to - from)) != count) return false;
    }
    return true;
}

// Random tuple with small entries, kept small enough that the sign-table
// box is faithful for the grid.
inline std::vector<LexVector> random_tuple(Rng& rng, int len, int rank, ScalarField field) {
    std::vector<LexVector> tuple;
    for (int j = 0; j < len; ++j) {
        LexVector v(rank);
        for (int i = 0; i < rank; ++i) {
            if (field == ScalarField::Q)
                v[i] = QuadExt(Rat(rng.range(-2, 2)));
            else
                v[i] = QuadExt(Rat(rng.range(-1, 1)), Rat(rng.range(-1, 1)));
        }
        tuple.push_back(std::move(v));
    }
    return tuple;
}

// Applies a random order-preserving embedding: a lower-triangular matrix
// with positive diagonal followed by insertion of zero coordinates at
// fresh levels.  The result generates an order-isomorphic marked group.
inline std::vector<LexVector> order_embedded_copy(Rng& rng, std::span<const LexVector> tuple,
                                                  int extra_levels = 1) {
    if (tuple.empty()) return {};
    const int rank = tuple.front().rank();
    std::vector<std::vector<Rat>> mat(static_cast<std::size_t>(rank),
                                      std::vector<Rat>(static_cast<std::size_t>(rank)));
    for (int i = 0; i < rank; ++i) {
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            Rat(rng.range(1, 3), rng.range(1, 2));
        for (int k = 0; k < i; ++k)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Rat(rng.range(-2, 2));
    }
    // choose an increasing level injection into rank + extra_levels
    const int new_rank = rank + extra_levels;
    std::vector<int> slot(static_cast<std::size_t>(rank));
    int offset = extra_levels > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(extra_levels + 1)))
                                  : 0;
    for (int i = 0; i < rank; ++i) slot[static_cast<std::size_t>(i)] = i + offset;

    std::vector<LexVector> out;
    for (const auto& v : tuple) {
        LexVector w(new_rank);
        for (int i = 0; i < rank; ++i) {
            QuadExt acc;
            for (int k = 0; k <= i; ++k)
                acc += QuadExt(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * v[k];
            w[slot[static_cast<std::size_t>(i)]] = acc;
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace curvette::testing
