#pragma once

#include <cstdint>
#include <vector>

#include "curvette/errors.hpp"
#include "curvette/hahn.hpp"
#include "curvette/point.hpp"

namespace curvette {

// Deterministic pseudorandom stream (splitmix64).  The standard
// distributions are not pinned down across standard libraries, so the
// draws here are hand-rolled to keep seeds reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

struct SampleParams {
    int n = 4;
    int m = 3;
    ScalarField field = ScalarField::Q;
    double density = 0.5;  // 0 produces monomial images only
};

namespace detail {

inline QuadExt random_exponent_entry(Rng& rng, ScalarField field) {
    if (field == ScalarField::Q) return QuadExt(Rat(rng.range(-3, 3)));
    return QuadExt(Rat(rng.range(-2, 2)), Rat(rng.range(-1, 1)));
}

inline LexVector random_exponent(Rng& rng, int m, ScalarField field) {
    LexVector v(m);
    for (int i = 0; i < m; ++i) v[i] = random_exponent_entry(rng, field);
    return v;
}

inline LexVector random_positive_exponent(Rng& rng, int m, ScalarField field) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        LexVector v = random_exponent(rng, m, field);
        int s = v.signum();
        if (s > 0) return v;
        if (s < 0) return -v;
    }
    LexVector v = LexVector::zero(m);
    v[m - 1] = QuadExt(1);
    return v;
}

}  // namespace detail

// Deterministic pseudorandom semi-curvette.  Each image is
// u * t^gamma * (1 + h) with a random mixed-sign exponent gamma and a
// random tail h of positive value, inverted as a whole 20% of the time;
// 10% of images are zero to exercise support handling.  Negative sign
// axes are drawn only over Q, where the exponent grid is integral.
inline Point random_point(std::uint64_t seed, const SampleParams& params) {
    if (params.n < 1 || params.n > 8 || params.m < 1 || params.m > 8)
        throw ValidationError("sampler supports 1 <= n, m <= 8");
    Rng rng(seed);

    SignData signs = SignData::all_positive(params.m);
    if (params.field == ScalarField::Q)
        for (int i = 0; i < params.m; ++i)
            if (rng.chance(15)) signs.axes[static_cast<std::size_t>(i)] = -1;

    int max_tail = params.density <= 0 ? 0 : static_cast<int>(params.density * 3 + 0.5);

    std::vector<HahnFraction> images;
    images.reserve(static_cast<std::size_t>(params.n));
    for (int j = 0; j < params.n; ++j) {
        if (rng.chance(10)) {
            images.push_back(HahnFraction::zero(params.m));
            continue;
        }
        long num = rng.range(1, 5) * (rng.chance(50) ? 1 : -1);
        Rat unit(num, rng.range(1, 3));
        LexVector gamma = detail::random_exponent(rng, params.m, params.field);

        HahnPoly body = HahnPoly::monomial(gamma, unit);
        if (max_tail > 0) {
            long terms = rng.range(0, max_tail);
            for (long k = 0; k < terms; ++k) {
                LexVector eps = detail::random_positive_exponent(rng, params.m, params.field);
                Rat coeff(rng.range(1, 4) * (rng.chance(50) ? 1 : -1), rng.range(1, 2));
                body.add_term(gamma + eps, Rat(unit * coeff));
            }
        }
        HahnFraction image{body};
        if (rng.chance(20)) image = image.invert();
        images.push_back(std::move(image));
    }
    return make_point(params.n, params.m, params.field, std::move(signs), std::move(images));
}

}  // namespace curvette
