#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "curvette/errors.hpp"
#include "curvette/polynomial.hpp"
#include "curvette/scalars.hpp"

namespace curvette {

namespace detail {

// Recursive-descent parser for polynomial expressions over x1..xn (the
// letter y is accepted as a synonym).  Precedence: ^ over * over binary
// +/-, with +, -, * left-associative; ^ takes a non-negative integer.
class ExprParser {
public:
    ExprParser(std::string_view src, int nvars) : src_(src), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (peek() != '^') return base;
        take();
        skip_ws();
        if (peek() == '-') fail("negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (take() - '0');
            if (e > 1000) fail("exponent too large");
        }
        return base.pow(static_cast<int>(e));
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial p = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (c == 'x' || c == 'y') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
            long j = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                j = j * 10 + (take() - '0');
                if (j > 1000) fail("variable index too large");
            }
            if (j < 1 || j > nvars_)
                fail("variable index " + std::to_string(j) + " out of range 1.." +
                     std::to_string(nvars_));
            return Polynomial::variable(nvars_, static_cast<int>(j));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat value;
            if (!scan_rational(src_, pos_, value)) fail("invalid rational literal");
            return Polynomial::constant(nvars_, std::move(value));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return src_[pos_++]; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view src_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view src, int nvars) {
    return detail::ExprParser(src, nvars).parse();
}

}  // namespace curvette
