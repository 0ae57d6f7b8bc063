#pragma once

#include <initializer_list>
#include <vector>

#include "curvette/curvette.hpp"

namespace curvette::testing {

inline LexVector lex(std::initializer_list<int> entries) {
    std::vector<QuadExt> coords;
    for (int e : entries) coords.emplace_back(e);
    return LexVector(std::move(coords));
}

inline LexVector lexq(std::initializer_list<Rat> entries) {
    std::vector<QuadExt> coords;
    for (const Rat& e : entries) coords.emplace_back(e);
    return LexVector(std::move(coords));
}

inline QuadExt surd(Rat a, Rat b) { return QuadExt(std::move(a), std::move(b)); }

inline HahnFraction mono_fraction(std::initializer_list<int> exponent, Rat c = Rat(1)) {
    return HahnFraction(HahnPoly::monomial(lex(exponent), std::move(c)));
}

// sum of terms (coefficient, exponent)
inline HahnPoly series(int rank, std::initializer_list<std::pair<Rat, LexVector>> terms) {
    HahnPoly p(rank);
    for (const auto& [c, e] : terms) p.add_term(e, c);
    return p;
}

}  // namespace curvette::testing
