#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Exponent tuples are non-negative.
class Polynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, Rat c) {
        Polynomial p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }
    // 1-based variable index
    static Polynomial variable(int nvars, int j) {
        Polynomial p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        p.add_term(std::move(e), Rat(1));
        return p;
    }
    static Polynomial monomial(int nvars, Exponents e, Rat c) {
        Polynomial p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exponents e, Rat c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int degree_in(int j) const {  // 1-based
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(j - 1)]);
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), Rat(ca * cb));
            }
        return r;
    }

    friend Polynomial operator*(const Rat& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : p.terms_) r.terms_.emplace(e, Rat(c * coeff));
        return r;
    }

    Polynomial pow(int e) const {
        Polynomial acc = constant(nvars_, Rat(1));
        Polynomial base = *this;
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            if (k > 1) base = base * base;
        }
        return acc;
    }

    bool operator==(const Polynomial&) const = default;

private:
    void require_same_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw RankMismatch("polynomials in " + std::to_string(nvars_) + " and " +
                               std::to_string(o.nvars_) + " variables");
    }

    int nvars_;
    TermMap terms_;
};

inline std::string to_string(const Polynomial& p, char letter = 'x') {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += letter + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rat coeff = c;
        std::string joiner;
        if (out.empty()) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            joiner = coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        out += joiner;
        if (mono.empty()) {
            out += to_string(coeff);
        } else if (coeff == 1) {
            out += mono;
        } else {
            out += to_string(coeff) + "*" + mono;
        }
    }
    return out;
}

}  // namespace curvette
