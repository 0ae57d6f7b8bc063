#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/hahn.hpp"
#include "curvette/indexset.hpp"
#include "curvette/lexvec.hpp"
#include "curvette/polynomial.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

enum class ScalarField { Q, QSqrt2 };

inline std::string to_string(ScalarField f) { return f == ScalarField::Q ? "Q" : "Qsqrt2"; }

// A point of the real spectrum of Q[x_1..x_n], given as a semi-curvette:
// one exact series fraction per coordinate plus sign data for the
// exponent axes.  Coordinates with zero numerator are the support.
//
// Residue transcendentals are not represented separately; a point is
// always stored in flattened form where each residue generator occupies
// its own lex level of the exponent group.
struct Point {
    int n = 0;  // number of polynomial variables
    int m = 0;  // ambient lex rank of the exponent group
    ScalarField field = ScalarField::Q;
    SignData signs;
    std::vector<HahnFraction> images;

    const HahnFraction& image(int j) const {  // 1-based
        return images[static_cast<std::size_t>(j - 1)];
    }
};

inline Point make_point(int n, int m, ScalarField field, SignData signs,
                        std::vector<HahnFraction> images) {
    if (static_cast<int>(images.size()) != n)
        throw ValidationError("expected " + std::to_string(n) + " coordinate images, got " +
                              std::to_string(images.size()));
    if (signs.rank() != m) throw ValidationError("sign data rank does not match m");
    for (const auto& f : images)
        if (f.rank() != m) throw ValidationError("coordinate image rank does not match m");
    return Point{n, m, field, std::move(signs), std::move(images)};
}

// Equality of points as spectra data: same shape, same sign data, and
// coordinatewise equal images as field elements (cross-multiplication).
inline bool point_equal(const Point& a, const Point& b) {
    if (a.n != b.n) throw LengthMismatch("points with different numbers of variables");
    if (a.m != b.m || a.signs != b.signs) return false;
    for (int j = 1; j <= a.n; ++j)
        if (!a.image(j).equals(b.image(j))) return false;
    return true;
}

// Image of a polynomial under the semi-curvette morphism.
inline HahnFraction evaluate(const Point& delta, const Polynomial& f) {
    if (f.nvars() != delta.n)
        throw RankMismatch("polynomial in " + std::to_string(f.nvars()) +
                           " variables evaluated at a point with n = " + std::to_string(delta.n));
    HahnFraction acc = HahnFraction::zero(delta.m);
    for (const auto& [e, c] : f.terms()) {
        HahnFraction mono = HahnFraction::constant(delta.m, c);
        for (int j = 1; j <= delta.n; ++j) {
            int d = e[static_cast<std::size_t>(j - 1)];
            if (d != 0) mono = mono * delta.image(j).pow(d);
        }
        acc = acc + mono;
    }
    return acc;
}

inline bool in_support(const Point& delta, const Polynomial& f) {
    return evaluate(delta, f).is_zero();
}

// Sign of f at the point; zero exactly on the support.  This is the total
// order the point carries.
inline int sign_at(const Point& delta, const Polynomial& f) {
    return signum(evaluate(delta, f), delta.signs);
}

// A valuation value: a lex vector, or infinity for support elements
// (infinity compares greater than every group element).
using ValueOrInf = std::optional<LexVector>;

inline bool is_infinite(const ValueOrInf& v) { return !v.has_value(); }
inline int value_signum(const ValueOrInf& v) { return v ? v->signum() : 1; }
inline bool value_positive(const ValueOrInf& v) { return value_signum(v) > 0; }
inline bool value_zero(const ValueOrInf& v) { return v && v->is_zero(); }
inline bool value_negative(const ValueOrInf& v) { return value_signum(v) < 0; }

inline std::string to_string(const ValueOrInf& v) { return v ? to_string(*v) : "inf"; }

// Full t-adic value of the image of f: the valuation of the flattened
// point, before any coarsening.
inline ValueOrInf fine_valuation(const Point& delta, const Polynomial& f) {
    HahnFraction v = evaluate(delta, f);
    if (v.is_zero()) return std::nullopt;
    return valuation(v);
}

inline ValueOrInf fine_coordinate(const Point& delta, int j) {
    if (delta.image(j).is_zero()) return std::nullopt;
    return valuation(delta.image(j));
}

// Kernel of the coarsening from the fine value group to the value group
// of the point's own valuation: the convex hull of the negative fine
// values of the coordinate images.
inline ConvexSubgroup coarsening_kernel(const Point& delta) {
    std::vector<LexVector> negatives;
    for (int j = 1; j <= delta.n; ++j) {
        ValueOrInf v = fine_coordinate(delta, j);
        if (v && v->signum() < 0) negatives.push_back(*v);
    }
    return convex_hull(negatives, delta.m);
}

// Value of f under the point's valuation, realized inside the ambient
// group with zeroed tail.
inline ValueOrInf coarse_valuation(const Point& delta, const Polynomial& f) {
    ValueOrInf v = fine_valuation(delta, f);
    if (!v) return std::nullopt;
    return project(*v, coarsening_kernel(delta));
}

// Partition of the coordinates by their behaviour at the point:
//   I  infinitesimal with coarse value zero
//   F  finite units (fine value zero)
//   G  infinite coordinates (negative fine value)
//   P  everything else: positive coarse value, including the support
struct Classification {
    IndexSet I, F, G, P;
    ConvexSubgroup delta_kernel;

    IndexSet zero_set() const { return I | F | G; }
    int p() const { return zero_set().size(); }

    bool operator==(const Classification&) const = default;
};

// Per-point cache for batch predicates: fine and coarse coordinate
// values, the coarsening kernel, and the classification.
struct PointSummary {
    std::vector<ValueOrInf> fine;    // index j-1
    std::vector<ValueOrInf> coarse;  // index j-1
    ConvexSubgroup kernel;
    Classification cls;

    const ValueOrInf& fine_at(int j) const { return fine[static_cast<std::size_t>(j - 1)]; }
    const ValueOrInf& coarse_at(int j) const { return coarse[static_cast<std::size_t>(j - 1)]; }
};

inline PointSummary summarize(const Point& delta) {
    PointSummary s;
    s.fine.reserve(static_cast<std::size_t>(delta.n));
    std::vector<LexVector> negatives;
    for (int j = 1; j <= delta.n; ++j) {
        s.fine.push_back(fine_coordinate(delta, j));
        if (s.fine.back() && s.fine.back()->signum() < 0) negatives.push_back(*s.fine.back());
    }
    s.kernel = convex_hull(negatives, delta.m);
    s.coarse.reserve(s.fine.size());
    for (const auto& v : s.fine)
        s.coarse.push_back(v ? ValueOrInf(project(*v, s.kernel)) : std::nullopt);

    s.cls.delta_kernel = s.kernel;
    for (int j = 1; j <= delta.n; ++j) {
        const ValueOrInf& v = s.fine_at(j);
        if (v && v->signum() < 0) {
            s.cls.G.insert(j);
        } else if (v && v->is_zero()) {
            s.cls.F.insert(j);
        } else if (v && s.kernel.contains(*v)) {
            s.cls.I.insert(j);
        } else {
            s.cls.P.insert(j);
        }
    }
    return s;
}

inline Classification classify(const Point& delta) { return summarize(delta).cls; }

// A point is finite exactly when no coordinate is infinite.
inline bool is_finite(const Point& delta) {
    for (int j = 1; j <= delta.n; ++j) {
        ValueOrInf v = fine_coordinate(delta, j);
        if (v && v->signum() < 0) return false;
    }
    return true;
}

}  // namespace curvette
