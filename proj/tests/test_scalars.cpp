#include <catch2/catch_amalgamated.hpp>

#include "curvette/sampler.hpp"
#include "curvette/scalars.hpp"

using namespace curvette;

namespace {

QuadExt random_quad(Rng& rng) {
    return QuadExt(Rat(rng.range(-6, 6), rng.range(1, 4)), Rat(rng.range(-6, 6), rng.range(1, 4)));
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(parse_rat("22/7") == Rat(22, 7));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(to_string(Rat(-7, 2)) == "-7/2");
    CHECK(to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK(is_even_integer(Rat(4)));
    CHECK_FALSE(is_even_integer(Rat(3)));
    CHECK_FALSE(is_even_integer(Rat(1, 2)));
}

TEST_CASE("quadratic extension sign is exact") {
    CHECK(QuadExt(Rat(0), Rat(0)).signum() == 0);
    // sqrt2 > 1
    CHECK(QuadExt(Rat(-1), Rat(1)).signum() == 1);
    // 3 - 2 sqrt2 > 0 since 9 > 8
    CHECK(QuadExt(Rat(3), Rat(-2)).signum() == 1);
    CHECK(QuadExt(Rat(-3), Rat(2)).signum() == -1);
    CHECK(QuadExt(Rat(1), Rat(-1)).signum() == -1);
    CHECK(QuadExt(Rat(7, 5), Rat(-1)).signum() == -1);  // 7/5 < sqrt2
    CHECK(QuadExt(Rat(3, 2), Rat(-1)).signum() == 1);   // 3/2 > sqrt2
}

TEST_CASE("quadratic extension field axioms on random samples") {
    Rng rng(20240901);
    for (int trial = 0; trial < 300; ++trial) {
        QuadExt x = random_quad(rng);
        QuadExt y = random_quad(rng);
        QuadExt z = random_quad(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == QuadExt());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == QuadExt(1));
        }
    }
}

TEST_CASE("sign is multiplicative and odd") {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        QuadExt x = random_quad(rng);
        QuadExt y = random_quad(rng);
        CHECK((x * y).signum() == x.signum() * y.signum());
        CHECK(x.signum() == -(-x).signum());
    }
}

TEST_CASE("scalar strings round-trip") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        QuadExt x = random_quad(rng);
        std::string printed = to_string(x);
        CHECK(parse_scalar(printed) == x);
        CHECK(to_string(parse_scalar(printed)) == printed);
    }
    CHECK(parse_scalar("1/2+3/4*sqrt2") == QuadExt(Rat(1, 2), Rat(3, 4)));
    CHECK(parse_scalar("1/2-3/4*sqrt2") == QuadExt(Rat(1, 2), Rat(-3, 4)));
    CHECK(parse_scalar("sqrt2") == QuadExt(Rat(0), Rat(1)));
    CHECK(parse_scalar("-sqrt2") == QuadExt(Rat(0), Rat(-1)));
    CHECK(parse_scalar("0") == QuadExt());
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+2"), ParseError);
}
