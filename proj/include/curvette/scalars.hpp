#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "curvette/errors.hpp"

namespace curvette {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  Always stored normalized: gcd(num, den) = 1,
// den > 0.  The base coefficient field of the whole library is Q; see
// the README for why no larger real closed field is needed.
using Rat = boost::multiprecision::cpp_rational;

inline int signum(const Rat& x) { return x.sign(); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline bool is_even_integer(const Rat& x) {
    return is_integer(x) && numerator(x) % 2 == 0;
}

inline std::string to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

namespace detail {

inline bool scan_rational(std::string_view s, std::size_t& pos, Rat& out) {
    std::size_t i = pos;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    std::size_t digits_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == digits_begin) return false;
    BigInt num(std::string(s.substr(digits_begin, i - digits_begin)));
    if (negative) num = -num;
    BigInt den = 1;
    if (i < s.size() && s[i] == '/') {
        std::size_t j = i + 1;
        std::size_t den_begin = j;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == den_begin) return false;
        den = BigInt(std::string(s.substr(den_begin, j - den_begin)));
        if (den == 0) return false;
        i = j;
    }
    out = Rat(num, den);
    pos = i;
    return true;
}

}  // namespace detail

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(std::string_view s) {
    std::size_t pos = 0;
    Rat out;
    if (!detail::scan_rational(s, pos, out) || pos != s.size())
        throw ParseError("invalid rational literal '" + std::string(s) + "'", pos);
    return out;
}

// Element a + b*sqrt(2) of the real quadratic extension Q(sqrt 2).
// Exponent scalars of the ambient lexicographic group live here; plain
// rationals are the b = 0 case.  The sign of a nonzero element is exact:
// when a and b disagree in sign it is decided by comparing a^2 with 2 b^2.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}  // NOLINT: implicit by design, scalar literal
    QuadExt(Rat a) : a_(std::move(a)) {}
    QuadExt(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rat& rat_part() const { return a_; }
    const Rat& surd_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && curvette::is_integer(a_); }

    int signum() const {
        int sa = curvette::signum(a_);
        int sb = curvette::signum(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: |a| vs |b|sqrt2, i.e. a^2 vs 2 b^2.  Equality is
        // impossible for rational a, b not both zero.
        int d = curvette::signum(Rat(a_ * a_ - 2 * b_ * b_));
        return d > 0 ? sa : sb;
    }

    QuadExt operator-() const { return QuadExt(Rat(-a_), Rat(-b_)); }

    QuadExt& operator+=(const QuadExt& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        Rat a = a_ * o.a_ + 2 * b_ * o.b_;
        Rat b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }

    QuadExt inverse() const {
        if (is_zero()) throw Error("division by zero in Q(sqrt2)");
        Rat norm = a_ * a_ - 2 * b_ * b_;  // nonzero: sqrt2 is irrational
        return QuadExt(Rat(a_ / norm), Rat(-b_ / norm));
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        return x * y.inverse();
    }

    QuadExt abs() const { return signum() < 0 ? -*this : *this; }

    bool operator==(const QuadExt&) const = default;

    std::strong_ordering operator<=>(const QuadExt& o) const {
        int s = (*this - o).signum();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rat a_;
    Rat b_;
};

inline std::string to_string(const QuadExt& x) {
    if (x.surd_part() == 0) return to_string(x.rat_part());
    Rat b = x.surd_part() < 0 ? Rat(-x.surd_part()) : x.surd_part();
    std::string surd = to_string(b) + "*sqrt2";
    if (x.rat_part() == 0)
        return (x.surd_part() < 0 ? "-" : "") + surd;
    return to_string(x.rat_part()) + (x.surd_part() < 0 ? "-" : "+") + surd;
}

// Parses "p/q", "p/q+r/s*sqrt2", "p/q-r/s*sqrt2", "r/s*sqrt2", with
// "sqrt2" also accepted for a unit surd coefficient.
inline QuadExt parse_scalar(std::string_view s) {
    std::size_t pos = 0;
    auto scan_surd_suffix = [&](void) -> bool {
        if (s.compare(pos, 6, "*sqrt2") == 0) {
            pos += 6;
            return true;
        }
        return false;
    };
    auto scan_bare_sqrt2 = [&](int& sign_out) -> bool {
        std::size_t p = pos;
        int sign = 1;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -1;
            ++p;
        }
        if (s.compare(p, 5, "sqrt2") == 0) {
            pos = p + 5;
            sign_out = sign;
            return true;
        }
        return false;
    };

    int bare_sign = 0;
    if (scan_bare_sqrt2(bare_sign) && pos == s.size())
        return QuadExt(Rat(0), Rat(bare_sign));

    pos = 0;
    Rat first;
    if (!detail::scan_rational(s, pos, first))
        throw ParseError("invalid scalar '" + std::string(s) + "'", pos);
    if (pos == s.size()) return QuadExt(first);
    if (scan_surd_suffix()) {
        if (pos != s.size())
            throw ParseError("trailing characters in scalar '" + std::string(s) + "'", pos);
        return QuadExt(Rat(0), first);
    }
    // second component, sign is carried by the literal itself
    if (scan_bare_sqrt2(bare_sign)) {
        if (pos != s.size())
            throw ParseError("trailing characters in scalar '" + std::string(s) + "'", pos);
        return QuadExt(first, Rat(bare_sign));
    }
    Rat second;
    if (!detail::scan_rational(s, pos, second))
        throw ParseError("expected surd term in scalar '" + std::string(s) + "'", pos);
    if (!scan_surd_suffix() || pos != s.size())
        throw ParseError("expected '*sqrt2' in scalar '" + std::string(s) + "'", pos);
    return QuadExt(first, second);
}

}  // namespace curvette
