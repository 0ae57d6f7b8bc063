#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/lexvec.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

// Generalized power series with finite support: a sparse map from lex
// exponents to rational coefficients.  Exponents may be negative; the
// support being finite makes it trivially well ordered.
class HahnPoly {
public:
    using TermMap = std::map<LexVector, Rat>;

    explicit HahnPoly(int rank) : rank_(rank) {}

    static HahnPoly zero(int rank) { return HahnPoly(rank); }
    static HahnPoly constant(int rank, Rat c) {
        HahnPoly p(rank);
        p.add_term(LexVector::zero(rank), std::move(c));
        return p;
    }
    static HahnPoly one(int rank) { return constant(rank, Rat(1)); }
    static HahnPoly monomial(LexVector exponent, Rat c) {
        HahnPoly p(exponent.rank());
        p.add_term(std::move(exponent), std::move(c));
        return p;
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(LexVector exponent, Rat c) {
        if (c == 0) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exponent), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Minimal exponent of the support under the lex order.
    const LexVector& valuation() const {
        if (terms_.empty()) throw ZeroSeries("valuation of the zero series");
        return terms_.begin()->first;
    }
    const Rat& leading_coeff() const {
        if (terms_.empty()) throw ZeroSeries("leading coefficient of the zero series");
        return terms_.begin()->second;
    }

    HahnPoly operator-() const {
        HahnPoly r(rank_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
        return r;
    }

    HahnPoly& operator+=(const HahnPoly& o) {
        require_same_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    HahnPoly& operator-=(const HahnPoly& o) {
        require_same_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
        return *this;
    }

    friend HahnPoly operator+(HahnPoly a, const HahnPoly& b) { return a += b; }
    friend HahnPoly operator-(HahnPoly a, const HahnPoly& b) { return a -= b; }

    friend HahnPoly operator*(const HahnPoly& a, const HahnPoly& b) {
        a.require_same_rank(b);
        HahnPoly r(a.rank_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Rat(ca * cb));
        return r;
    }

    friend HahnPoly operator*(const Rat& c, const HahnPoly& p) {
        HahnPoly r(p.rank_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : p.terms_) r.terms_.emplace(e, Rat(c * coeff));
        return r;
    }

    bool operator==(const HahnPoly&) const = default;

private:
    friend class HahnFraction;

    void require_same_rank(const HahnPoly& o) const {
        if (rank_ != o.rank_)
            throw RankMismatch("series of rank " + std::to_string(rank_) + " and " +
                               std::to_string(o.rank_));
    }

    int rank_;
    TermMap terms_;
};

// Per-axis sign choices for the generators t^{e_i} of the monomial group.
// An axis carrying -1 forces integer exponents on that axis: sign
// characters on divisible exponent parts are trivial.
struct SignData {
    std::vector<int> axes;  // entries +1 or -1

    static SignData all_positive(int rank) {
        return SignData{std::vector<int>(static_cast<std::size_t>(rank), 1)};
    }

    int rank() const { return static_cast<int>(axes.size()); }
    bool operator==(const SignData&) const = default;
};

// Sign character of t^exponent under the axis choices.
inline int monomial_character(const LexVector& exponent, const SignData& s) {
    int chi = 1;
    for (int i = 0; i < exponent.rank(); ++i) {
        if (s.axes[static_cast<std::size_t>(i)] == 1) continue;
        const QuadExt& e = exponent[i];
        if (e.is_zero()) continue;
        if (!e.is_integer())
            throw NonIntegerSignedExponent("axis " + std::to_string(i + 1) +
                                           " carries sign -1 but exponent entry " +
                                           to_string(e) + " is not an integer");
        if (!is_even_integer(e.rat_part())) chi = -chi;
    }
    return chi;
}

// Sign of a series under the ordering the sign data defines: the sign of
// the leading coefficient times the character of the leading monomial
// (every later term is infinitesimal against the leading one).
inline int signum(const HahnPoly& p, const SignData& s) {
    if (p.is_zero()) return 0;
    return signum(p.leading_coeff()) * monomial_character(p.valuation(), s);
}

// Exact quotient of two finite-support series.  No normalization is
// attempted (the series ring has no useful gcd); equality is decided by
// cross-multiplication.
class HahnFraction {
public:
    explicit HahnFraction(HahnPoly num)
        : num_(std::move(num)), den_(HahnPoly::one(num_.rank())) {}
    HahnFraction(HahnPoly num, HahnPoly den) : num_(std::move(num)), den_(std::move(den)) {
        num_.require_same_rank(den_);
        if (den_.is_zero()) throw ZeroSeries("fraction with zero denominator");
    }

    static HahnFraction zero(int rank) { return HahnFraction(HahnPoly::zero(rank)); }
    static HahnFraction constant(int rank, Rat c) {
        return HahnFraction(HahnPoly::constant(rank, std::move(c)));
    }

    const HahnPoly& num() const { return num_; }
    const HahnPoly& den() const { return den_; }
    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }

    HahnFraction invert() const {
        if (num_.is_zero()) throw ZeroSeries("inverse of the zero fraction");
        return HahnFraction(den_, num_);
    }

    HahnFraction operator-() const { return HahnFraction(-num_, den_); }

    friend HahnFraction operator+(const HahnFraction& a, const HahnFraction& b) {
        return HahnFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend HahnFraction operator-(const HahnFraction& a, const HahnFraction& b) {
        return HahnFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend HahnFraction operator*(const HahnFraction& a, const HahnFraction& b) {
        return HahnFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend HahnFraction operator/(const HahnFraction& a, const HahnFraction& b) {
        return a * b.invert();
    }

    HahnFraction pow(long e) const {
        if (e < 0) return invert().pow(-e);
        HahnFraction acc = constant(rank(), Rat(1));
        HahnFraction base = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            if (k > 1) base = base * base;
        }
        return acc;
    }

    // Equality as field elements, by cross-multiplication.
    bool equals(const HahnFraction& o) const { return num_ * o.den_ == o.num_ * den_; }

private:
    HahnPoly num_;
    HahnPoly den_;
};

inline LexVector valuation(const HahnFraction& f) {
    if (f.num().is_zero()) throw ZeroSeries("valuation of the zero fraction");
    return f.num().valuation() - f.den().valuation();
}

inline int signum(const HahnFraction& f, const SignData& s) {
    int sn = signum(f.num(), s);
    if (sn == 0) return 0;
    return sn * signum(f.den(), s);
}

// Finite truncation of the exact quotient: returns a finite-support
// series g agreeing with f on every exponent strictly below the frontier,
// via the geometric series of the denominator tail.  Exponent groups of
// lex rank >= 2 admit quotients with infinitely many exponents below a
// frontier; the budget bounds the work and such inputs are rejected.
inline HahnPoly expand(const HahnFraction& f, const LexVector& frontier,
                       std::size_t max_steps = 10000) {
    if (f.num().is_zero() || f.den().is_zero())
        throw ZeroSeries("expansion needs nonzero numerator and denominator");

    const int rank = f.rank();
    const LexVector den_val = f.den().valuation();
    HahnPoly lead_inv =
        HahnPoly::monomial(-den_val, Rat(1 / f.den().leading_coeff()));

    // den = L (1 - s); s has strictly positive valuation
    HahnPoly s = (HahnPoly::monomial(den_val, f.den().leading_coeff()) - f.den()) * lead_inv;

    auto keep_below = [&](const HahnPoly& p) {
        HahnPoly r(rank);
        for (const auto& [e, c] : p.terms()) {
            if (e < frontier) r.add_term(e, c);
        }
        return r;
    };

    HahnPoly cur = keep_below(f.num() * lead_inv);
    HahnPoly acc(rank);
    for (std::size_t step = 0; !cur.is_zero(); ++step) {
        if (step >= max_steps || acc.term_count() > max_steps)
            throw ExpansionBudgetExceeded(
                "quotient has too many exponents below the frontier " + to_string(frontier));
        acc += cur;
        cur = keep_below(cur * s);
    }
    return acc;
}

inline std::string to_string(const HahnPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (!e.is_zero()) out += "*t^" + to_string(e);
    }
    return out;
}

inline std::string to_string(const HahnFraction& f) {
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

}  // namespace curvette
