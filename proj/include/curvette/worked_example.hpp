#pragma once

#include "curvette/chart.hpp"
#include "curvette/point.hpp"

namespace curvette {

// The worked example bundled with the CLI: a five-variable point at
// infinity whose residue transcendentals are flattened into a rank-4
// exponent group, its canonical chart, and the monomial substitution
// that repairs the dependence between the two positive coordinate
// values.
struct WorkedExample {
    Point delta;                   // n = 5, m = 4
    ChartSpec chart;               // T = {3}
    MonomialMap blowup;            // x5 -> x4' * x5'
    ChartSpec chart_after_blowup;  // T = {3, 5}

    static WorkedExample make() {
        const int m = 4;
        auto mono = [&](int a, int b, int c, int d) {
            LexVector e(m);
            e[0] = QuadExt(a);
            e[1] = QuadExt(b);
            e[2] = QuadExt(c);
            e[3] = QuadExt(d);
            return HahnFraction(HahnPoly::monomial(e, Rat(1)));
        };
        std::vector<HahnFraction> images;
        images.push_back(mono(0, 0, 0, 1));  // x1: infinitesimal unit
        HahnPoly x2 = HahnPoly::one(m);      // x2: 1 + t^(0,1,0,0)
        {
            LexVector e(m);
            e[1] = QuadExt(1);
            x2.add_term(e, Rat(1));
        }
        images.push_back(HahnFraction(x2));
        images.push_back(mono(0, 0, -1, 0));  // x3: infinite element
        images.push_back(mono(1, 0, 0, 0));   // x4
        images.push_back(mono(1, 0, -1, 0));  // x5 = x3 * x4

        std::vector<std::vector<long>> rows(5, std::vector<long>(5, 0));
        for (int i = 0; i < 5; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        rows[4][3] = 1;  // x5 maps to x4' * x5'

        return WorkedExample{
            make_point(5, m, ScalarField::Q, SignData::all_positive(m), std::move(images)),
            ChartSpec{IndexSet{3}},
            MonomialMap(std::move(rows)),
            ChartSpec{IndexSet{3, 5}},
        };
    }
};

}  // namespace curvette
