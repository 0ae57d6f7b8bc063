#include <catch2/catch_amalgamated.hpp>

#include "curvette/expr.hpp"
#include "curvette/point.hpp"
#include "curvette/sampler.hpp"
#include "curvette/worked_example.hpp"

#include "support/fixtures.hpp"

using namespace curvette;
using curvette::testing::lex;

namespace {

Polynomial poly(const std::string& src, int n) { return parse_polynomial(src, n); }

Polynomial random_poly(Rng& rng, int n) {
    Polynomial p(n);
    long terms = rng.range(1, 3);
    for (long k = 0; k < terms; ++k) {
        Polynomial::Exponents e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = static_cast<int>(rng.range(0, 2));
        p.add_term(std::move(e), Rat(rng.range(-4, 4), rng.range(1, 2)));
    }
    return p;
}

}  // namespace

TEST_CASE("evaluation at the worked example") {
    Point delta = WorkedExample::make().delta;

    CHECK(evaluate(delta, poly("x2 - 1", 5))
              .equals(HahnFraction(HahnPoly::monomial(lex({0, 1, 0, 0}), Rat(1)))));
    CHECK(evaluate(delta, poly("7/3", 5)).equals(HahnFraction::constant(4, Rat(7, 3))));
    CHECK(evaluate(delta, poly("x4*x3", 5))
              .equals(HahnFraction(HahnPoly::monomial(lex({1, 0, -1, 0}), Rat(1)))));
}

TEST_CASE("support membership") {
    Point delta = WorkedExample::make().delta;
    CHECK(in_support(delta, Polynomial::zero(5)));
    CHECK(in_support(delta, poly("x5 - x3*x4", 5)));
    CHECK_FALSE(in_support(delta, poly("x1", 5)));
}

TEST_CASE("signs at the worked example") {
    Point delta = WorkedExample::make().delta;
    // the infinite coordinate exceeds every constant
    for (const char* expr : {"x3 - 1", "x3 - 10", "x3 - 1000000"})
        CHECK(sign_at(delta, poly(expr, 5)) == 1);
    CHECK(sign_at(delta, poly("0 - x1", 5)) == -1);
    // the infinitesimal coordinate is below every positive constant
    CHECK(sign_at(delta, poly("x1 - 1/1000", 5)) == -1);
}

TEST_CASE("fine and coarse values at the worked example") {
    Point delta = WorkedExample::make().delta;

    CHECK(fine_valuation(delta, poly("x1", 5)) == ValueOrInf(lex({0, 0, 0, 1})));
    CHECK(fine_valuation(delta, poly("x2", 5)) == ValueOrInf(lex({0, 0, 0, 0})));
    CHECK(fine_valuation(delta, Polynomial::zero(5)) == ValueOrInf());

    CHECK(coarsening_kernel(delta).cut_level == 3);

    for (const char* expr : {"x1", "x2", "x3"})
        CHECK(value_zero(coarse_valuation(delta, poly(expr, 5))));
    CHECK(coarse_valuation(delta, poly("x4", 5)) == ValueOrInf(lex({1, 0, 0, 0})));
    CHECK(coarse_valuation(delta, poly("x5", 5)) == ValueOrInf(lex({1, 0, 0, 0})));
}

TEST_CASE("kernel as a boundedness witness") {
    Point delta = WorkedExample::make().delta;
    // x1 is bounded by a power of x3, so x1 contributes nothing negative
    CHECK(sign_at(delta, poly("x3 - x1", 5)) == 1);
    // no power of any coordinate bounds 1/x4
    HahnFraction inv_x4 = evaluate(delta, poly("x4", 5)).invert();
    for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 3; ++k) {
            HahnFraction power = evaluate(delta, Polynomial::variable(5, j)).pow(k);
            CHECK(signum(inv_x4 - power, delta.signs) == 1);
        }
}

TEST_CASE("kernel edge cases") {
    // all non-negative fine values: trivial kernel, coarse equals fine
    Point finite = make_point(
        1, 1, ScalarField::Q, SignData::all_positive(1),
        {HahnFraction(HahnPoly::monomial(lex({1}), Rat(1)))});
    CHECK(coarsening_kernel(finite).cut_level == 2);
    CHECK(coarse_valuation(finite, poly("x1", 1)) == fine_valuation(finite, poly("x1", 1)));

    // a single infinite coordinate swallows the whole group
    Point infinite = make_point(
        1, 1, ScalarField::Q, SignData::all_positive(1),
        {HahnFraction(HahnPoly::monomial(lex({-1}), Rat(1)))});
    CHECK(coarsening_kernel(infinite).cut_level == 1);
    CHECK(value_zero(coarse_valuation(infinite, poly("x1", 1))));
}

TEST_CASE("classification of the worked example") {
    Classification c = classify(WorkedExample::make().delta);
    CHECK(c.I == IndexSet{1});
    CHECK(c.F == IndexSet{2});
    CHECK(c.G == IndexSet{3});
    CHECK(c.P == IndexSet{4, 5});
    CHECK(c.p() == 3);
    CHECK(c.delta_kernel.cut_level == 3);
}

TEST_CASE("classification of special points") {
    Point constants = make_point(3, 1, ScalarField::Q, SignData::all_positive(1),
                                 {HahnFraction::constant(1, Rat(2)),
                                  HahnFraction::constant(1, Rat(-1)),
                                  HahnFraction::constant(1, Rat(1, 7))});
    Classification c = classify(constants);
    CHECK(c.F == IndexSet::full(3));
    CHECK(c.I.empty());
    CHECK(c.G.empty());
    CHECK(c.P.empty());

    Point curve = make_point(1, 1, ScalarField::Q, SignData::all_positive(1),
                             {HahnFraction(HahnPoly::monomial(lex({1}), Rat(1)))});
    Classification cc = classify(curve);
    CHECK(cc.P == IndexSet{1});
    CHECK(cc.G.empty());
    CHECK(cc.I.empty());
    CHECK(is_finite(curve));
}

TEST_CASE("finiteness") {
    WorkedExample ex = WorkedExample::make();
    CHECK_FALSE(is_finite(ex.delta));
    Point star = ex.delta;
    star.images[2] = star.images[2].invert();
    CHECK(is_finite(star));
}

TEST_CASE("point equality is fraction equality") {
    Point delta = WorkedExample::make().delta;
    CHECK(point_equal(delta, delta));

    Point scaled = delta;
    HahnPoly two = HahnPoly::constant(4, Rat(2));
    scaled.images[0] =
        HahnFraction(two * scaled.images[0].num(), two * scaled.images[0].den());
    CHECK(point_equal(delta, scaled));

    Point star = delta;
    star.images[2] = star.images[2].invert();
    CHECK_FALSE(point_equal(delta, star));
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(616);
    for (int trial = 0; trial < 40; ++trial) {
        Point delta = random_point(rng.next(), SampleParams{3, 2, ScalarField::Q, 0.5});
        Polynomial f = random_poly(rng, 3);
        Polynomial g = random_poly(rng, 3);
        CHECK(evaluate(delta, f + g).equals(evaluate(delta, f) + evaluate(delta, g)));
        CHECK(evaluate(delta, f * g).equals(evaluate(delta, f) * evaluate(delta, g)));
    }
}

TEST_CASE("support is prime on sampled products") {
    Rng rng(323);
    for (int trial = 0; trial < 60; ++trial) {
        Point delta = random_point(rng.next(), SampleParams{3, 2, ScalarField::Q, 0.3});
        Polynomial f = random_poly(rng, 3);
        Polynomial g = random_poly(rng, 3);
        if (in_support(delta, f * g)) CHECK((in_support(delta, f) || in_support(delta, g)));
    }
}

TEST_CASE("sign respects the ring structure") {
    Rng rng(2023);
    for (int trial = 0; trial < 60; ++trial) {
        Point delta = random_point(rng.next(), SampleParams{3, 2, ScalarField::Q, 0.4});
        Polynomial f = random_poly(rng, 3);
        Polynomial g = random_poly(rng, 3);
        CHECK(sign_at(delta, f * g) == sign_at(delta, f) * sign_at(delta, g));
    }
}

TEST_CASE("classification matches the order-theoretic reading") {
    Rng rng(112233);
    std::vector<Rat> epsilons{Rat(1), Rat(1, 10), Rat(1, 1000000)};
    for (int trial = 0; trial < 50; ++trial) {
        Point delta = random_point(rng.next(), SampleParams{4, 3, ScalarField::Q, 0.5});
        PointSummary s = summarize(delta);
        for (int j = 1; j <= delta.n; ++j) {
            Polynomial xj = Polynomial::variable(delta.n, j);
            int sj = sign_at(delta, xj);
            if (s.cls.I.contains(j)) {
                REQUIRE(sj != 0);
                for (const Rat& eps : epsilons) {
                    Polynomial probe = Rat(sj) * xj - Polynomial::constant(delta.n, eps);
                    CHECK(sign_at(delta, probe) == -1);
                }
            } else if (s.cls.G.contains(j)) {
                REQUIRE(sj != 0);
                for (const Rat& bound : epsilons) {
                    Polynomial probe = Rat(sj) * xj - Polynomial::constant(delta.n, Rat(1) / bound);
                    CHECK(sign_at(delta, probe) == 1);
                }
            } else if (s.cls.F.contains(j)) {
                // the magnitude of the exact standard part gives explicit
                // pinching witnesses (sign characters only flip signs)
                REQUIRE(sj != 0);
                HahnFraction image = evaluate(delta, xj);
                Rat part = image.num().leading_coeff() / image.den().leading_coeff();
                if (part < 0) part = -part;
                REQUIRE(part > 0);
                Polynomial lower = Rat(sj) * xj - Polynomial::constant(delta.n, part / 2);
                Polynomial upper = Polynomial::constant(delta.n, 2 * part + 1) - Rat(sj) * xj;
                CHECK(sign_at(delta, lower) == 1);
                CHECK(sign_at(delta, upper) == 1);
            }
        }
        // a finite point has no infinitesimal-unit coordinates
        if (s.cls.G.empty()) CHECK(s.cls.I.empty());
    }
}

TEST_CASE("coarse value is additive on products") {
    Rng rng(7771);
    for (int trial = 0; trial < 60; ++trial) {
        Point delta = random_point(rng.next(), SampleParams{3, 2, ScalarField::Q, 0.4});
        Polynomial f = random_poly(rng, 3);
        Polynomial g = random_poly(rng, 3);
        if (in_support(delta, f) || in_support(delta, g)) continue;
        ValueOrInf vf = coarse_valuation(delta, f);
        ValueOrInf vg = coarse_valuation(delta, g);
        ValueOrInf vfg = coarse_valuation(delta, f * g);
        REQUIRE(vf);
        REQUIRE(vg);
        REQUIRE(vfg);
        CHECK(*vfg == *vf + *vg);
    }
}
