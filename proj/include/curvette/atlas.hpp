#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "curvette/chart.hpp"
#include "curvette/errors.hpp"
#include "curvette/indexset.hpp"
#include "curvette/point.hpp"
#include "curvette/relations.hpp"

namespace curvette {

// The six membership predicates.  Plain kinds classify a point of the
// original space; starred kinds classify a (finite) point of a chart
// image; anchored kinds additionally pin the order-equivalence class of
// the valuation tuple.
enum class UKind { IFG, IFGStar, AnchoredIFG, AnchoredIFGStar, HT, HTStar };

inline std::string to_string(UKind k) {
    switch (k) {
        case UKind::IFG: return "IFG";
        case UKind::IFGStar: return "IFG*";
        case UKind::AnchoredIFG: return "aIFG";
        case UKind::AnchoredIFGStar: return "aIFG*";
        case UKind::HT: return "HT";
        default: return "HT*";
    }
}

struct USetDescriptor {
    UKind kind = UKind::IFG;
    IndexSet I, F, G;                              // IFG kinds
    IndexSet H, T;                                 // HT kinds
    std::optional<std::vector<LexVector>> anchor;  // anchored kinds, length n

    IndexSet zero_set() const {
        return (kind == UKind::HT || kind == UKind::HTStar) ? (H | T) : (I | F | G);
    }
};

inline void validate_descriptor(const USetDescriptor& d, int n) {
    IndexSet all = IndexSet::full(n);
    switch (d.kind) {
        case UKind::IFG:
        case UKind::IFGStar:
        case UKind::AnchoredIFG:
        case UKind::AnchoredIFGStar: {
            if (!d.I.subset_of(all) || !d.F.subset_of(all) || !d.G.subset_of(all))
                throw ValidationError("descriptor indices out of range");
            if (!d.I.disjoint_with(d.F) || !d.I.disjoint_with(d.G) || !d.F.disjoint_with(d.G))
                throw ValidationError("I, F, G must be pairwise disjoint");
            if (d.G.empty() && !d.I.empty())
                throw ValidationError("I must be empty when G is empty");
            break;
        }
        case UKind::HT:
        case UKind::HTStar: {
            if (!d.H.subset_of(all) || !d.T.subset_of(all))
                throw ValidationError("descriptor indices out of range");
            if (!d.H.disjoint_with(d.T)) throw ValidationError("H and T must be disjoint");
            break;
        }
    }
    bool anchored = d.kind == UKind::AnchoredIFG || d.kind == UKind::AnchoredIFGStar;
    if (anchored) {
        if (!d.anchor) throw ValidationError("anchored descriptor without anchor");
        if (static_cast<int>(d.anchor->size()) != n)
            throw ValidationError("anchor must list one value per coordinate");
        IndexSet zs = d.zero_set();
        for (int j = 1; j <= n; ++j) {
            const LexVector& a = (*d.anchor)[static_cast<std::size_t>(j - 1)];
            if (zs.contains(j) ? !a.is_zero() : a.signum() <= 0)
                throw ValidationError(
                    "anchor must vanish exactly on I u F u G and be positive elsewhere");
        }
    } else if (d.anchor) {
        throw ValidationError("anchor given for an unanchored descriptor kind");
    }
}

namespace detail {

// Does some positive multiple of q_val exceed j_val?  Infinity can
// dominate anything finite and can never be dominated.
inline bool dominates(const ValueOrInf& q_val, const ValueOrInf& j_val) {
    if (is_infinite(j_val)) return false;
    if (is_infinite(q_val)) return true;
    return level(*q_val) <= level(*j_val);
}

// Is N' * j_val < t_val for every natural N' (including N' = 0)?
inline bool infinitely_below(const ValueOrInf& j_val, const ValueOrInf& t_val) {
    if (!value_positive(t_val)) return false;  // N' = 0 already fails
    if (is_infinite(j_val)) return false;      // infinity is never below anything
    if (j_val->signum() <= 0) return true;
    if (is_infinite(t_val)) return true;
    return level(*j_val) > level(*t_val);
}

inline bool ifg_star_member(const PointSummary& s, int n, IndexSet I, IndexSet F, IndexSet G,
                            IndexSet pset) {
    // finite point
    for (int j = 1; j <= n; ++j)
        if (value_negative(s.fine_at(j))) return false;
    // chart units: bounded below, hence value zero once finiteness holds
    for (int j : F.to_vector()) {
        const ValueOrInf& v = s.fine_at(j);
        if (is_infinite(v) || v->signum() > 0) return false;
    }
    // strictly positive values on I u G; G must avoid the support
    for (int j : I.to_vector())
        if (!value_positive(s.fine_at(j))) return false;
    for (int j : G.to_vector()) {
        const ValueOrInf& v = s.fine_at(j);
        if (is_infinite(v) || v->signum() <= 0) return false;
    }
    // one chart coordinate dominates every infinitesimal one
    if (!I.empty()) {
        bool found = false;
        for (int q : G.to_vector()) {
            bool all = true;
            for (int j : I.to_vector())
                if (!dominates(s.fine_at(q), s.fine_at(j))) {
                    all = false;
                    break;
                }
            if (all) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    // the zero-set values sit infinitely below every tail value
    for (int j : pset.to_vector())
        for (int t = 1; t <= n; ++t) {
            if (pset.contains(t)) continue;
            if (!infinitely_below(s.fine_at(j), s.fine_at(t))) return false;
        }
    // tail positivity
    for (int t = 1; t <= n; ++t)
        if (!pset.contains(t) && !value_positive(s.fine_at(t))) return false;
    return true;
}

inline bool collect_finite(const std::vector<ValueOrInf>& vals, IndexSet which,
                           std::vector<LexVector>& out) {
    for (int j : which.to_vector()) {
        const ValueOrInf& v = vals[static_cast<std::size_t>(j - 1)];
        if (is_infinite(v)) return false;
        out.push_back(*v);
    }
    return true;
}

}  // namespace detail

// Membership from a precomputed summary (batch path).
inline bool is_member(const PointSummary& s, int n, const USetDescriptor& d) {
    validate_descriptor(d, n);
    const IndexSet pset = d.zero_set();

    switch (d.kind) {
        case UKind::IFG:
        case UKind::AnchoredIFG: {
            for (int j : d.I.to_vector())  // infinitesimal: below every constant
                if (!value_positive(s.fine_at(j))) return false;
            for (int j : d.F.to_vector())  // unit: pinched between constants
                if (!value_zero(s.fine_at(j))) return false;
            for (int j : d.G.to_vector())  // infinite: above every constant
                if (!value_negative(s.fine_at(j))) return false;
            for (int j : pset.to_vector())
                if (!value_zero(s.coarse_at(j))) return false;
            for (int t = 1; t <= n; ++t)
                if (!pset.contains(t) && !value_positive(s.coarse_at(t))) return false;
            if (d.kind == UKind::IFG) return true;
            std::vector<LexVector> values;
            if (!detail::collect_finite(s.coarse, IndexSet::full(n), values)) return false;
            return order_equivalent(values, *d.anchor);
        }
        case UKind::IFGStar:
        case UKind::AnchoredIFGStar: {
            if (!detail::ifg_star_member(s, n, d.I, d.F, d.G, pset)) return false;
            if (d.kind == UKind::IFGStar) return true;
            IndexSet tail = IndexSet::full(n) - pset;
            std::vector<LexVector> values, anchor_tail;
            if (!detail::collect_finite(s.fine, tail, values)) return false;
            for (int t : tail.to_vector())
                anchor_tail.push_back((*d.anchor)[static_cast<std::size_t>(t - 1)]);
            return order_equivalent(values, anchor_tail);
        }
        case UKind::HT: {
            for (int j : d.H.to_vector())  // bounded above
                if (value_negative(s.fine_at(j))) return false;
            for (int j : d.T.to_vector()) {  // bounded below by a positive constant
                const ValueOrInf& v = s.fine_at(j);
                if (is_infinite(v) || v->signum() > 0) return false;
            }
            for (int j : pset.to_vector())
                if (!value_zero(s.coarse_at(j))) return false;
            for (int t = 1; t <= n; ++t)
                if (!pset.contains(t) && !value_positive(s.coarse_at(t))) return false;
            return true;
        }
        case UKind::HTStar:
        default: {
            for (int j = 1; j <= n; ++j)  // finite point
                if (value_negative(s.fine_at(j))) return false;
            for (int j : d.T.to_vector())  // chart domain avoids the support on T
                if (is_infinite(s.fine_at(j))) return false;
            // positive-valued H coordinates need a dominating chart coordinate
            IndexSet positive_h;
            for (int j : d.H.to_vector())
                if (value_positive(s.fine_at(j))) positive_h.insert(j);
            if (!positive_h.empty()) {
                bool found = false;
                for (int q : d.T.to_vector()) {
                    if (!value_positive(s.fine_at(q))) continue;
                    bool all = true;
                    for (int j : positive_h.to_vector())
                        if (!detail::dominates(s.fine_at(q), s.fine_at(j))) {
                            all = false;
                            break;
                        }
                    if (all) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
            for (int j : pset.to_vector())
                for (int t = 1; t <= n; ++t) {
                    if (pset.contains(t)) continue;
                    if (!detail::infinitely_below(s.fine_at(j), s.fine_at(t))) return false;
                }
            for (int t = 1; t <= n; ++t)
                if (!pset.contains(t) && !value_positive(s.fine_at(t))) return false;
            return true;
        }
    }
}

inline bool is_member(const Point& delta, const USetDescriptor& d) {
    return is_member(summarize(delta), delta.n, d);
}

namespace detail {

// Invokes fn(I, F, G) for every triple of pairwise disjoint subsets of
// {1..n} with the I-empty-when-G-empty convention.
template <typename Fn>
inline void for_each_triple(int n, Fn&& fn) {
    IndexSet all = IndexSet::full(n);
    all.for_each_subset([&](IndexSet ifg) {
        ifg.for_each_subset([&](IndexSet i_part) {
            IndexSet rest = ifg - i_part;
            rest.for_each_subset([&](IndexSet f_part) {
                IndexSet g_part = rest - f_part;
                if (g_part.empty() && !i_part.empty()) return;
                fn(i_part, f_part, g_part);
            });
        });
    });
}

}  // namespace detail

struct PartitionViolation {
    std::size_t point_index = 0;
    std::string what;
};

struct PartitionReport {
    std::size_t checked = 0;
    std::vector<PartitionViolation> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string triple_str(IndexSet i, IndexSet f, IndexSet g) {
    auto set_str = [](IndexSet s) {
        std::string out = "{";
        bool first = true;
        for (int j : s.to_vector()) {
            if (!first) out += ",";
            out += std::to_string(j);
            first = false;
        }
        return out + "}";
    };
    return "(" + set_str(i) + "," + set_str(f) + "," + set_str(g) + ")";
}

inline void check_one_partition(const Point& delta, std::size_t index,
                                std::vector<PartitionViolation>& out) {
    PointSummary s = summarize(delta);
    const int n = delta.n;

    // exactly one plain triple holds, and it is the classification
    int hits = 0;
    IndexSet hit_i, hit_f, hit_g;
    for_each_triple(n, [&](IndexSet i_part, IndexSet f_part, IndexSet g_part) {
        USetDescriptor d;
        d.kind = UKind::IFG;
        d.I = i_part;
        d.F = f_part;
        d.G = g_part;
        if (is_member(s, n, d)) {
            ++hits;
            hit_i = i_part;
            hit_f = f_part;
            hit_g = g_part;
        }
    });
    if (hits != 1) {
        out.push_back({index, "point lies in " + std::to_string(hits) + " classification sets"});
        return;
    }
    if (hit_i != s.cls.I || hit_f != s.cls.F || hit_g != s.cls.G) {
        out.push_back({index, "membership triple " + triple_str(hit_i, hit_f, hit_g) +
                                  " differs from the classification " +
                                  triple_str(s.cls.I, s.cls.F, s.cls.G)});
        return;
    }

    // covering: members among the two-set descriptors are exactly the
    // pairs predicted by the classification, and each decomposes into a
    // unique constituent triple (the classification itself)
    const IndexSet pset = s.cls.zero_set();
    IndexSet all = IndexSet::full(n);
    all.for_each_subset([&](IndexSet h_part) {
        (all - h_part).for_each_subset([&](IndexSet t_part) {
            USetDescriptor d;
            d.kind = UKind::HT;
            d.H = h_part;
            d.T = t_part;
            bool member = is_member(s, n, d);
            bool predicted = ((h_part | t_part) == pset) && s.cls.I.subset_of(h_part) &&
                             s.cls.G.subset_of(t_part);
            if (member != predicted) {
                out.push_back({index, std::string(member ? "unexpected" : "missing") +
                                          " two-set membership for H=" + triple_str(h_part, t_part, {})});
                return;
            }
            if (!member) return;
            int constituents = 0;
            bool matches_cls = false;
            for_each_triple(n, [&](IndexSet i_part, IndexSet f_part, IndexSet g_part) {
                if ((i_part | f_part | g_part) != (h_part | t_part)) return;
                if (!i_part.subset_of(h_part) || !g_part.subset_of(t_part)) return;
                USetDescriptor c;
                c.kind = UKind::IFG;
                c.I = i_part;
                c.F = f_part;
                c.G = g_part;
                if (is_member(s, n, c)) {
                    ++constituents;
                    matches_cls = (i_part == s.cls.I && f_part == s.cls.F && g_part == s.cls.G);
                }
            });
            if (constituents != 1 || !matches_cls)
                out.push_back({index, "two-set member decomposes into " +
                                          std::to_string(constituents) + " constituents"});
        });
    });
}

}  // namespace detail

// Verifies, for every sampled point, that it lies in exactly one
// classification set (the one its classification predicts) and that the
// two-set covering decomposes as expected.  Samples are distributed
// across workers; the report is merged in sample order.
inline PartitionReport check_partition(std::span<const Point> points, unsigned workers = 0) {
    PartitionReport report;
    report.checked = points.size();
    if (points.empty()) return report;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(points.size()));

    std::vector<std::future<std::vector<PartitionViolation>>> parts;
    std::size_t chunk = (points.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(points.size(), lo + chunk);
        if (lo >= hi) break;
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<PartitionViolation> vs;
            for (std::size_t i = lo; i < hi; ++i) detail::check_one_partition(points[i], i, vs);
            return vs;
        }));
    }
    for (auto& part : parts)
        for (auto& v : part.get()) report.violations.push_back(std::move(v));
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const PartitionViolation& a, const PartitionViolation& b) {
                         return a.point_index < b.point_index;
                     });
    return report;
}

struct TransferEntry {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct TransferReport {
    std::vector<TransferEntry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::Fail) return false;
        return true;
    }
    const TransferEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

// Membership transfer along a chart: the chart map must carry each
// classification set into its starred counterpart and back, must invert
// cleanly, and must respect anchored memberships under the independence
// hypotheses (which are tested, and gate the anchored entries).
inline TransferReport check_transfer(const Point& delta, const ChartSpec& chart,
                                     const std::optional<std::vector<LexVector>>& anchor) {
    PointSummary s = summarize(delta);
    if (!chart_valid(s.cls, chart))
        throw InvalidChart("chart must contain G and avoid everything outside G u F");

    TransferReport report;
    auto add = [&](std::string name, CheckStatus st, std::string witness) {
        report.entries.push_back(TransferEntry{std::move(name), st, std::move(witness)});
    };

    Point star = transform(delta, chart);
    PointSummary ss = summarize(star);
    const int n = delta.n;

    {
        Point back = inverse_transform(star, chart);
        add("roundtrip", point_equal(back, delta) ? CheckStatus::Pass : CheckStatus::Fail,
            "inverse transform composed with the transform");
    }

    {
        // forward and backward membership agreement on every descriptor
        // whose own chart constraint this chart satisfies
        std::size_t checked = 0;
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        detail::for_each_triple(n, [&](IndexSet i_part, IndexSet f_part, IndexSet g_part) {
            if (st == CheckStatus::Fail) return;
            if (!g_part.subset_of(chart.T) || !chart.T.subset_of(g_part | f_part)) return;
            USetDescriptor plain;
            plain.kind = UKind::IFG;
            plain.I = i_part;
            plain.F = f_part;
            plain.G = g_part;
            USetDescriptor starred = plain;
            starred.kind = UKind::IFGStar;
            ++checked;
            if (is_member(s, n, plain) != is_member(ss, n, starred)) {
                st = CheckStatus::Fail;
                w = "membership differs on " + detail::triple_str(i_part, f_part, g_part);
            }
        });
        if (st == CheckStatus::Pass)
            w = "agreed on " + std::to_string(checked) + " descriptors";
        add("membership-transfer", st, std::move(w));
    }

    {
        // two-set transfer for this chart's own T
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        std::size_t checked = 0;
        (IndexSet::full(n) - chart.T).for_each_subset([&](IndexSet h_part) {
            if (st == CheckStatus::Fail) return;
            USetDescriptor plain;
            plain.kind = UKind::HT;
            plain.H = h_part;
            plain.T = chart.T;
            USetDescriptor starred = plain;
            starred.kind = UKind::HTStar;
            ++checked;
            if (is_member(s, n, plain) != is_member(ss, n, starred)) {
                st = CheckStatus::Fail;
                w = "two-set membership differs for H with " + std::to_string(h_part.size()) +
                    " elements";
            }
        });
        if (st == CheckStatus::Pass) w = "agreed on " + std::to_string(checked) + " descriptors";
        add("two-set-transfer", st, std::move(w));
    }

    if (anchor) {
        USetDescriptor a_plain;
        a_plain.kind = UKind::AnchoredIFG;
        a_plain.I = s.cls.I;
        a_plain.F = s.cls.F;
        a_plain.G = s.cls.G;
        a_plain.anchor = anchor;
        USetDescriptor a_star = a_plain;
        a_star.kind = UKind::AnchoredIFGStar;

        IndexSet tail = IndexSet::full(n) - s.cls.zero_set();
        std::vector<LexVector> anchor_tail;
        for (int t : tail.to_vector())
            anchor_tail.push_back((*anchor)[static_cast<std::size_t>(t - 1)]);
        bool q_indep = rationally_independent(anchor_tail);
        bool scalewise = scalewise_independent(anchor_tail);

        if (!q_indep) {
            add("anchored-forward", CheckStatus::Skipped,
                "hypothesis fails: anchor tail is not Q-linearly independent");
        } else {
            bool in_a = is_member(s, n, a_plain);
            bool in_a_star = is_member(ss, n, a_star);
            add("anchored-forward", (!in_a || in_a_star) ? CheckStatus::Pass : CheckStatus::Fail,
                in_a ? "anchored membership carried forward" : "point not in the anchored set");
        }
        if (!scalewise) {
            add("anchored-backward", CheckStatus::Skipped,
                "scalewise hypothesis fails for the anchor tail");
        } else {
            bool in_a = is_member(s, n, a_plain);
            bool in_a_star = is_member(ss, n, a_star);
            add("anchored-backward", (!in_a_star || in_a) ? CheckStatus::Pass : CheckStatus::Fail,
                in_a_star ? "anchored membership carried backward" : "image not in the anchored set");
        }
    }

    return report;
}

}  // namespace curvette
