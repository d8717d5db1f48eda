#ifndef WHITLAT_TEST_HELPERS_HPP
#define WHITLAT_TEST_HELPERS_HPP

#include <random>

#include "whitlat/laurent.hpp"

namespace whitlat::testing {

inline LaurentPoly zvar(int rank, int i, int power = 1) {
    return LaurentPoly::z(rank, i, power);
}

inline LaurentPoly vvar(int rank, int power = 1) { return LaurentPoly::v(rank, power); }

inline LaurentPoly cpoly(int rank, long c) { return LaurentPoly::constant(rank, Rat(c)); }

inline LaurentPoly random_poly(int rank, std::mt19937& rng, int max_terms = 4,
                               int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(-max_exp, max_exp);
    std::uniform_int_distribution<int> coeffd(-5, 5);
    std::uniform_int_distribution<int> dend(1, 3);
    LaurentPoly p(rank);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> ze(rank);
        for (int& e : ze) e = expd(rng);
        p += LaurentPoly::monomial(rank, ze, expd(rng), Rat(coeffd(rng), dend(rng)));
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(int rank, std::mt19937& rng, int max_terms = 4,
                                       int max_exp = 2) {
    for (;;) {
        LaurentPoly p = random_poly(rank, rng, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

} // namespace whitlat::testing

#endif
