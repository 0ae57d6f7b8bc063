#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/lexvec.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

// Incremental reduced row echelon basis over Q.
class RatEchelon {
public:
    explicit RatEchelon(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }

    // Eliminates the basis pivots from r in place.
    void reduce(std::vector<Rat>& r) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rat& c = r[static_cast<std::size_t>(pivots_[k])];
            if (c == 0) continue;
            Rat factor = c;  // pivot entries are normalized to 1
            for (int j = 0; j < width_; ++j)
                r[static_cast<std::size_t>(j)] -= factor * rows_[k][static_cast<std::size_t>(j)];
        }
    }

    // Reduces r and, if a nonzero remainder is left, inserts it.
    // Returns the new pivot column (0-based), or -1 if r was dependent.
    int insert(std::vector<Rat> r) {
        reduce(r);
        int piv = -1;
        for (int j = 0; j < width_; ++j)
            if (r[static_cast<std::size_t>(j)] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return -1;
        Rat lead = r[static_cast<std::size_t>(piv)];
        for (int j = 0; j < width_; ++j) r[static_cast<std::size_t>(j)] /= lead;
        // back-eliminate to keep the basis fully reduced
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Rat c = rows_[k][static_cast<std::size_t>(piv)];
            if (c == 0) continue;
            for (int j = 0; j < width_; ++j)
                rows_[k][static_cast<std::size_t>(j)] -= c * r[static_cast<std::size_t>(j)];
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(piv);
        return piv;
    }

private:
    int width_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivots_;
};

inline int rat_rank(std::vector<std::vector<Rat>> rows, int width) {
    RatEchelon e(width);
    for (auto& r : rows) e.insert(std::move(r));
    return e.rank();
}

// Splits a lex vector into its rational components, interleaved so that
// split position 2i / 2i+1 corresponds to coordinate i: (a0, b0, a1, b1, ...).
inline std::vector<Rat> split_components(const LexVector& v) {
    std::vector<Rat> r;
    r.reserve(static_cast<std::size_t>(2 * v.rank()));
    for (int i = 0; i < v.rank(); ++i) {
        r.push_back(v[i].rat_part());
        r.push_back(v[i].surd_part());
    }
    return r;
}

// Q-linear independence of a tuple, by exact rank over Q with Q(sqrt2)
// coordinates split into their two rational components.
inline bool rationally_independent(std::span<const LexVector> tuple) {
    if (tuple.empty()) return true;
    int width = 2 * tuple.front().rank();
    RatEchelon e(width);
    for (const auto& v : tuple)
        if (e.insert(split_components(v)) < 0) return false;
    return true;
}

// Canonical form of the order relations of a generator tuple
// (a_1, ..., a_l).  Two tuples generate order-isomorphic marked groups
// exactly when the sign functions m |-> sign(sum m_j a_j) on Z^l agree,
// and that function is what the form canonicalizes.
//
// Rows are the ambient coordinates read top-down as linear forms in m.
// A new row is reduced modulo the Q-span of both rational components of
// every kept row (any such combination vanishes wherever the scan has
// already passed), dropped if it reduces to zero, and otherwise scaled by
// a positive element of Q(sqrt2) so its leading entry has absolute value
// one with its sign preserved.  Reduction by the component span rather
// than by the kept rows themselves is what makes the form canonical when
// surd parts are present.
struct CanonicalRelations {
    std::vector<std::vector<QuadExt>> rows;

    bool operator==(const CanonicalRelations&) const = default;
};

inline CanonicalRelations canonical_relations(std::span<const LexVector> tuple) {
    CanonicalRelations form;
    if (tuple.empty()) return form;
    int len = static_cast<int>(tuple.size());
    int rank = tuple.front().rank();
    for (const auto& v : tuple)
        if (v.rank() != rank)
            throw RankMismatch("mixed ambient ranks within one tuple");

    RatEchelon zero_lattice(len);
    for (int i = 0; i < rank; ++i) {
        std::vector<Rat> rat_row(static_cast<std::size_t>(len));
        std::vector<Rat> surd_row(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) {
            rat_row[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j)][i].rat_part();
            surd_row[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j)][i].surd_part();
        }
        zero_lattice.reduce(rat_row);
        zero_lattice.reduce(surd_row);

        std::vector<QuadExt> row(static_cast<std::size_t>(len));
        int lead = -1;
        for (int j = 0; j < len; ++j) {
            row[static_cast<std::size_t>(j)] =
                QuadExt(rat_row[static_cast<std::size_t>(j)], surd_row[static_cast<std::size_t>(j)]);
            if (lead < 0 && !row[static_cast<std::size_t>(j)].is_zero()) lead = j;
        }
        if (lead < 0) continue;

        QuadExt scale = row[static_cast<std::size_t>(lead)].abs().inverse();
        for (auto& x : row) x = scale * x;

        std::vector<Rat> kept_rat(static_cast<std::size_t>(len));
        std::vector<Rat> kept_surd(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) {
            kept_rat[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)].rat_part();
            kept_surd[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)].surd_part();
        }
        zero_lattice.insert(std::move(kept_rat));
        zero_lattice.insert(std::move(kept_surd));

        form.rows.push_back(std::move(row));
    }
    return form;
}

// Order-equivalence of two generator tuples (equality of their relation
// sets).  Ambient ranks may differ; tuple lengths must match.
inline bool order_equivalent(std::span<const LexVector> a, std::span<const LexVector> b) {
    if (a.size() != b.size())
        throw LengthMismatch("tuples of length " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    return canonical_relations(a) == canonical_relations(b);
}

// Scalewise Q-linear independence: within each quotient of consecutive
// isolated subgroups of the generated group, the members of the tuple
// living at that level must stay Q-linearly independent.  The realized
// levels are read off the pivot positions of the echelon form of the
// Q-span; the quotient at a realized level is the coordinate slice from
// that level up to the next realized level.
inline bool scalewise_independent(std::span<const LexVector> a) {
    if (a.empty()) return true;
    int rank = a.front().rank();
    for (const auto& v : a) {
        if (v.rank() != rank) throw RankMismatch("mixed ambient ranks within one tuple");
        if (v.is_zero()) return false;  // no level class can absorb zero
    }

    RatEchelon span(2 * rank);
    for (const auto& v : a) span.insert(split_components(v));
    std::vector<int> levels;
    for (int piv : span.pivots()) {
        int lev = piv / 2 + 1;
        if (std::find(levels.begin(), levels.end(), lev) == levels.end()) levels.push_back(lev);
    }
    std::sort(levels.begin(), levels.end());

    for (std::size_t q = 0; q < levels.size(); ++q) {
        int from = levels[q];
        int to = (q + 1 < levels.size()) ? levels[q + 1] : rank + 1;  // exclusive
        std::vector<std::vector<Rat>> slice_rows;
        for (const auto& v : a) {
            if (level(v) != from) continue;
            std::vector<Rat> row;
            row.reserve(static_cast<std::size_t>(2 * (to - from)));
            for (int i = from - 1; i < to - 1; ++i) {
                row.push_back(v[i].rat_part());
                row.push_back(v[i].surd_part());
            }
            slice_rows.push_back(std::move(row));
        }
        std::size_t count = slice_rows.size();
        if (rat_rank(std::move(slice_rows), 2 * (to - from)) != static_cast<int>(count))
            return false;
    }
    return true;
}

}  // namespace curvette
