#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/indexset.hpp"
#include "curvette/point.hpp"
#include "curvette/relations.hpp"

namespace curvette {

// A coordinate chart: the set T of coordinates to invert (y_j = 1/x_j for
// j in T, y_j = x_j otherwise).
struct ChartSpec {
    IndexSet T;

    bool operator==(const ChartSpec&) const = default;
};

// A chart is valid for a classification when G <= T <= G u F.
inline bool chart_valid(const Classification& c, const ChartSpec& chart) {
    return c.G.subset_of(chart.T) && chart.T.subset_of(c.G | c.F);
}

// All valid charts for a classification, in ascending bitmask order.
inline std::vector<ChartSpec> valid_charts(const Classification& c) {
    std::vector<ChartSpec> out;
    c.F.for_each_subset([&](IndexSet f_part) { out.push_back(ChartSpec{c.G | f_part}); });
    std::sort(out.begin(), out.end(),
              [](const ChartSpec& a, const ChartSpec& b) { return a.T.bits() < b.T.bits(); });
    return out;
}

// The chart map: inverts the images of the chart coordinates, leaving
// everything else (rank, signs, field) untouched.  Defined for any T that
// avoids the support; validity against a classification is enforced only
// by the checking entry points.
inline Point transform(const Point& delta, const ChartSpec& chart) {
    Point out = delta;
    for (int j : chart.T.to_vector()) {
        if (delta.image(j).is_zero())
            throw ChartOnSupport("coordinate " + std::to_string(j) +
                                 " lies in the support and cannot be inverted");
        out.images[static_cast<std::size_t>(j - 1)] = delta.image(j).invert();
    }
    return out;
}

// The chart map is an involution, so the inverse has the same formula.
inline Point inverse_transform(const Point& delta_star, const ChartSpec& chart) {
    return transform(delta_star, chart);
}

// Rewrites a polynomial g in the chart variables as a polynomial in the
// original variables with monomial denominators cleared: substituting
// y_j -> 1/x_j for j in T and multiplying through by x_j^{deg_j g}.
// eval(transform(delta, T), g) equals
// eval(delta, numerator) / eval(delta, prod x_j^{clearing_degrees[j]}).
struct ChartSubstitution {
    Polynomial numerator;
    std::vector<int> clearing_degrees;  // index j-1; zero off the chart

    explicit ChartSubstitution(int nvars)
        : numerator(nvars), clearing_degrees(static_cast<std::size_t>(nvars), 0) {}
};

inline ChartSubstitution substitute_chart(const Polynomial& g, const ChartSpec& chart) {
    ChartSubstitution out(g.nvars());
    for (int j : chart.T.to_vector())
        out.clearing_degrees[static_cast<std::size_t>(j - 1)] = g.degree_in(j);
    for (const auto& [e, c] : g.terms()) {
        Polynomial::Exponents cleared(e);
        for (int j : chart.T.to_vector()) {
            std::size_t i = static_cast<std::size_t>(j - 1);
            cleared[i] = out.clearing_degrees[i] - e[i];
        }
        out.numerator.add_term(std::move(cleared), c);
    }
    return out;
}

// Per-coordinate comparison of the fine values of the transformed point
// with the coarse values of the original: the quotient projection must
// map one to the other.
struct PhiRow {
    int j = 0;
    ValueOrInf nu_star;
    ValueOrInf nu_delta;
    bool consistent = false;
};

inline std::vector<PhiRow> phi_tilde_report(const Point& delta, const ChartSpec& chart) {
    PointSummary s = summarize(delta);
    if (!chart_valid(s.cls, chart))
        throw InvalidChart("chart is not valid for the point's classification");
    Point star = transform(delta, chart);
    PointSummary ss = summarize(star);
    std::vector<PhiRow> rows;
    for (int j = 1; j <= delta.n; ++j) {
        PhiRow row;
        row.j = j;
        row.nu_star = ss.fine_at(j);
        row.nu_delta = s.coarse_at(j);
        ValueOrInf projected =
            row.nu_star ? ValueOrInf(project(*row.nu_star, s.kernel)) : std::nullopt;
        row.consistent = (projected == row.nu_delta);
        rows.push_back(std::move(row));
    }
    return rows;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

struct ClauseResult {
    int clause = 0;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct ChartReport {
    std::vector<ClauseResult> clauses;

    bool all_passed() const {
        for (const auto& c : clauses)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    const ClauseResult& clause(int k) const { return clauses[static_cast<std::size_t>(k - 1)]; }
};

namespace detail {

// Smallest positive integer N with N*base > bound (lex), found by
// doubling; both values must be positive with level(base) <= level(bound).
inline std::optional<long> dominating_multiple(const LexVector& base, const LexVector& bound) {
    if (level(base) > level(bound)) return std::nullopt;
    for (long n = 1; n <= (1L << 40); n *= 2)
        if (n * base > bound) return n;
    return std::nullopt;
}

inline LexVector lex_abs(const LexVector& v) { return v.signum() < 0 ? -v : v; }

}  // namespace detail

// Runs the seven consistency clauses relating the original point, its
// chart transform, and the quotient projection between their value
// groups.  Clause texts (witness strings) name the data they checked.
//
// Clause 4 cannot quantify over the whole function field; it checks the
// localization inclusion on a finite witness corpus (coordinates, their
// inverses off the support, and all monomials of degree two) plus
// convexity of the kernel on the collected values, and says so in its
// witness string.
inline ChartReport verify_chart(const Point& delta, const ChartSpec& chart) {
    PointSummary s = summarize(delta);
    if (!chart_valid(s.cls, chart))
        throw InvalidChart("chart must contain G and avoid everything outside G u F");

    Point star = transform(delta, chart);
    PointSummary ss = summarize(star);
    const IndexSet pset = s.cls.zero_set();

    ChartReport report;
    auto add = [&](int clause, CheckStatus st, std::string witness) {
        report.clauses.push_back(ClauseResult{clause, st, std::move(witness)});
    };

    {  // (1) chart units: fine value zero on F
        CheckStatus st = CheckStatus::Pass;
        std::string w = "F = " + std::to_string(s.cls.F.size()) + " coordinates, all with value 0";
        for (int j : s.cls.F.to_vector())
            if (!value_zero(ss.fine_at(j))) {
                st = CheckStatus::Fail;
                w = "coordinate " + std::to_string(j) + " has value " + to_string(ss.fine_at(j));
                break;
            }
        add(1, st, std::move(w));
    }

    {  // (2) strictly positive values on I u G
        CheckStatus st = CheckStatus::Pass;
        std::string w = "all values positive on I u G";
        for (int j : (s.cls.I | s.cls.G).to_vector()) {
            const ValueOrInf& v = ss.fine_at(j);
            if (is_infinite(v) || v->signum() <= 0) {
                st = CheckStatus::Fail;
                w = "coordinate " + std::to_string(j) + " has value " + to_string(v);
                break;
            }
        }
        add(2, st, std::move(w));
    }

    {  // (3) some chart coordinate dominates every infinitesimal one
        if (s.cls.I.empty()) {
            add(3, CheckStatus::Pass, "I is empty");
        } else if (s.cls.G.empty()) {
            add(3, CheckStatus::Fail, "I nonempty but G empty");
        } else {
            // the largest coordinate of G has the lex-smallest fine value
            int q = 0;
            for (int k : s.cls.G.to_vector())
                if (q == 0 || *s.fine_at(k) < *s.fine_at(q)) q = k;
            long n_needed = 1;
            CheckStatus st = CheckStatus::Pass;
            std::string w;
            for (int j : s.cls.I.to_vector()) {
                auto n = detail::dominating_multiple(*ss.fine_at(q), *ss.fine_at(j));
                if (!n) {
                    st = CheckStatus::Fail;
                    w = "no multiple of the value of coordinate " + std::to_string(q) +
                        " exceeds that of coordinate " + std::to_string(j);
                    break;
                }
                n_needed = std::max(n_needed, *n);
            }
            if (st == CheckStatus::Pass)
                w = "q = " + std::to_string(q) + ", N = " + std::to_string(n_needed);
            add(3, st, std::move(w));
        }
    }

    {  // (4) localization inclusion on the witness corpus + kernel convexity
        std::vector<ValueOrInf> corpus_vals;
        for (int j = 1; j <= delta.n; ++j) {
            corpus_vals.push_back(s.fine_at(j));
            if (!delta.image(j).is_zero()) {
                corpus_vals.push_back(ValueOrInf(valuation(delta.image(j).invert())));
            }
        }
        for (int i = 1; i <= delta.n; ++i)
            for (int j = i; j <= delta.n; ++j) {
                Polynomial mono = Polynomial::variable(delta.n, i) * Polynomial::variable(delta.n, j);
                corpus_vals.push_back(fine_valuation(delta, mono));
            }

        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (const auto& v : corpus_vals) {
            if (!v || v->signum() < 0) continue;
            if (project(*v, s.kernel).signum() < 0) {
                st = CheckStatus::Fail;
                w = "witness with fine value " + to_string(v) + " has negative coarse value";
                break;
            }
        }
        if (st == CheckStatus::Pass) {
            for (const auto& u : corpus_vals) {
                if (!u || !s.kernel.contains(*u)) continue;
                for (const auto& v : corpus_vals) {
                    if (!v) continue;
                    if (detail::lex_abs(*v) <= detail::lex_abs(*u) && !s.kernel.contains(*v)) {
                        st = CheckStatus::Fail;
                        w = "kernel not convex: |" + to_string(v) + "| <= |" + to_string(u) + "|";
                        break;
                    }
                }
                if (st == CheckStatus::Fail) break;
            }
        }
        if (st == CheckStatus::Pass)
            w = "checked " + std::to_string(corpus_vals.size()) +
                " witness values (coordinates, inverses, quadratic monomials); "
                "full quantification over the function field is not decidable";
        add(4, st, std::move(w));
    }

    {  // (5) the projection carries the transformed values to the original ones
        CheckStatus st = CheckStatus::Pass;
        std::string w = "projection consistent on all coordinates";
        for (int j = 1; j <= delta.n; ++j) {
            ValueOrInf projected =
                ss.fine_at(j) ? ValueOrInf(project(*ss.fine_at(j), s.kernel)) : std::nullopt;
            if (projected != s.coarse_at(j)) {
                st = CheckStatus::Fail;
                w = "coordinate " + std::to_string(j) + ": projected " + to_string(projected) +
                    " vs coarse " + to_string(s.coarse_at(j));
                break;
            }
        }
        add(5, st, std::move(w));
    }

    {  // (6) zero-set values land in the kernel, infinitely below the tail
        CheckStatus st = CheckStatus::Pass;
        std::string w = "kernel membership and level separation hold";
        for (int j : pset.to_vector()) {
            const ValueOrInf& vj = ss.fine_at(j);
            if (is_infinite(vj) || !s.kernel.contains(*vj)) {
                st = CheckStatus::Fail;
                w = "coordinate " + std::to_string(j) + " has value " + to_string(vj) +
                    " outside the kernel";
                break;
            }
            for (int t = 1; t <= delta.n && st == CheckStatus::Pass; ++t) {
                if (pset.contains(t)) continue;
                const ValueOrInf& vt = ss.fine_at(t);
                if (is_infinite(vt)) continue;
                if (!vj->is_zero() && level(*vj) <= level(*vt)) {
                    st = CheckStatus::Fail;
                    w = "multiples of the value of coordinate " + std::to_string(j) +
                        " reach that of coordinate " + std::to_string(t);
                }
            }
            if (st == CheckStatus::Fail) break;
        }
        add(6, st, std::move(w));
    }

    {  // (7) order-equivalence of the value tuples over the tail
        std::vector<LexVector> coarse_tail, star_tail;
        bool support_in_tail = false;
        for (int t = 1; t <= delta.n; ++t) {
            if (pset.contains(t)) continue;
            if (is_infinite(s.coarse_at(t)) || is_infinite(ss.fine_at(t))) {
                support_in_tail = true;
                break;
            }
            coarse_tail.push_back(*s.coarse_at(t));
            star_tail.push_back(*ss.fine_at(t));
        }
        if (support_in_tail) {
            add(7, CheckStatus::Skipped, "hypothesis fails: support coordinate in the tail");
        } else if (!rationally_independent(coarse_tail)) {
            add(7, CheckStatus::Skipped,
                "hypothesis fails: coarse tail values are Q-linearly dependent");
        } else if (order_equivalent(star_tail, coarse_tail)) {
            add(7, CheckStatus::Pass,
                "tail value tuples are order-equivalent (" + std::to_string(coarse_tail.size()) +
                    " values)");
        } else {
            add(7, CheckStatus::Fail, "tail value tuples are not order-equivalent");
        }
    }

    return report;
}

// Unimodular monomial change of coordinates x_i -> prod_j x'_j^{E_ij}.
class MonomialMap {
public:
    explicit MonomialMap(std::vector<std::vector<long>> rows) : e_(std::move(rows)) {
        n_ = static_cast<int>(e_.size());
        for (const auto& r : e_)
            if (static_cast<int>(r.size()) != n_)
                throw ValidationError("monomial map matrix must be square");
        compute_inverse();
    }

    static MonomialMap identity(int n) {
        std::vector<std::vector<long>> rows(static_cast<std::size_t>(n),
                                            std::vector<long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return MonomialMap(std::move(rows));
    }

    int n() const { return n_; }
    long entry(int i, int j) const {  // 1-based
        return e_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    long inverse_entry(int i, int j) const {  // 1-based
        return inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    const std::vector<std::vector<long>>& rows() const { return e_; }

    MonomialMap inverse() const { return MonomialMap(inv_); }

private:
    void compute_inverse() {
        // rational Gauss-Jordan; unimodularity makes the inverse integral
        std::size_t n = static_cast<std::size_t>(n_);
        std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(e_[i][j]);
            aug[i][n + i] = 1;
        }
        Rat det(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && aug[piv][col] == 0) ++piv;
            if (piv == n) throw ValidationError("monomial map matrix is singular");
            if (piv != col) {
                std::swap(aug[piv], aug[col]);
                det = -det;
            }
            det *= aug[col][col];
            Rat lead = aug[col][col];
            for (auto& x : aug[col]) x /= lead;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                Rat f = aug[r][col];
                for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
            }
        }
        if (det != 1 && det != -1)
            throw ValidationError("monomial map matrix must have determinant +1 or -1, got " +
                                  to_string(det));
        inv_.assign(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rat& x = aug[i][n + j];
                if (!is_integer(x))
                    throw ValidationError("monomial map inverse is not integral");
                inv_[i][j] = static_cast<long>(numerator(x));
            }
    }

    int n_ = 0;
    std::vector<std::vector<long>> e_;
    std::vector<std::vector<long>> inv_;
};

// The unique point delta' pulled back from delta by the substitution:
// image'(x'_j) = prod_i image(x_i)^{inv_ji}.
inline Point monomial_substitution(const Point& delta, const MonomialMap& pi) {
    if (pi.n() != delta.n)
        throw ValidationError("monomial map size does not match the point");
    Point out = delta;
    for (int j = 1; j <= delta.n; ++j) {
        HahnFraction acc = HahnFraction::constant(delta.m, Rat(1));
        bool vanishes = false;
        for (int i = 1; i <= delta.n; ++i) {
            long e = pi.inverse_entry(j, i);
            if (e == 0) continue;
            if (delta.image(i).is_zero()) {
                if (e < 0)
                    throw SupportObstruction("coordinate " + std::to_string(i) +
                                             " lies in the support but needs a negative power");
                vanishes = true;
                continue;
            }
            acc = acc * delta.image(i).pow(e);
        }
        out.images[static_cast<std::size_t>(j - 1)] =
            vanishes ? HahnFraction::zero(delta.m) : acc;
    }
    return out;
}

// Composition f(pi(x')) for polynomial maps (all image exponents
// non-negative); exponent rows transform by the matrix.
inline Polynomial compose_monomial(const Polynomial& f, const MonomialMap& pi) {
    if (pi.n() != f.nvars())
        throw ValidationError("monomial map size does not match the polynomial");
    Polynomial out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponents ne(static_cast<std::size_t>(f.nvars()), 0);
        for (int j = 1; j <= f.nvars(); ++j) {
            long total = 0;
            for (int i = 1; i <= f.nvars(); ++i)
                total += static_cast<long>(e[static_cast<std::size_t>(i - 1)]) * pi.entry(i, j);
            if (total < 0)
                throw ValidationError("composition produces a negative exponent");
            ne[static_cast<std::size_t>(j - 1)] = static_cast<int>(total);
        }
        out.add_term(std::move(ne), c);
    }
    return out;
}

}  // namespace curvette
