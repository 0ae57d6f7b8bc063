#include <catch2/catch_amalgamated.hpp>

#include "curvette/expr.hpp"
#include "curvette/polynomial.hpp"

using namespace curvette;

TEST_CASE("expression parsing") {
    Polynomial p = parse_polynomial("x1^2*x3 - 7/2", 3);
    Polynomial expected(3);
    expected.add_term({2, 0, 1}, Rat(1));
    expected.add_term({0, 0, 0}, Rat(-7, 2));
    CHECK(p == expected);

    // y is a synonym for x
    CHECK(parse_polynomial("y2 + x2", 2) == parse_polynomial("2*x2", 2));

    Polynomial binom = parse_polynomial("x5 - x3*x4", 5);
    Polynomial b2(5);
    b2.add_term({0, 0, 0, 0, 1}, Rat(1));
    b2.add_term({0, 0, 1, 1, 0}, Rat(-1));
    CHECK(binom == b2);

    CHECK(parse_polynomial("(x1+1)^2", 1) == parse_polynomial("x1^2 + 2*x1 + 1", 1));
    CHECK(parse_polynomial("-x1 + 2", 1) == parse_polynomial("2 - x1", 1));
}

TEST_CASE("expression errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("x0", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1^-2", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + ", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x1", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 x2", 3), ParseError);
    try {
        parse_polynomial("x1 + @", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("print then parse is the identity") {
    Polynomial p(4);
    p.add_term({2, 0, 1, 0}, Rat(3, 2));
    p.add_term({0, 1, 0, 0}, Rat(-1));
    p.add_term({0, 0, 0, 0}, Rat(7));
    std::string printed = to_string(p);
    CHECK(parse_polynomial(printed, 4) == p);
    CHECK(to_string(parse_polynomial(printed, 4)) == printed);
    CHECK(to_string(Polynomial::zero(2)) == "0");
    CHECK(parse_polynomial("0", 2) == Polynomial::zero(2));
}

TEST_CASE("ring structure") {
    Polynomial x = Polynomial::variable(2, 1);
    Polynomial y = Polynomial::variable(2, 2);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.degree_in(1) == 1);
    CHECK((x * y.pow(2)).degree_in(2) == 2);
    CHECK_THROWS_AS(Polynomial::zero(2) + Polynomial::zero(3), RankMismatch);
}
