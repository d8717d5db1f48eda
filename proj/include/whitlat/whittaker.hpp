#ifndef WHITLAT_WHITTAKER_HPP
#define WHITLAT_WHITTAKER_HPP

#include "whitlat/operators.hpp"

namespace whitlat {

/// Evaluation data for a Whittaker value at varpi^{-lambda} w2.
struct WhittakerQuery {
    int r = 1;
    WeightVec lam;
    Permutation w1{1};
    Permutation w2{1};
    ParabolicSubset J; // empty for Iwahori
};

/// phi_{w1}(z; varpi^{-lambda} w2) by the operator recursion; zero when
/// lambda is not w2-almost dominant.
LaurentPoly iwahori_value(const WeightVec& lam, const Permutation& w1, const Permutation& w2);

/// psi^J_{w1} = sum over y in W_J of phi_{w1 y}, evaluated at varpi^{-lambda} w2.
/// Requires w1 in W^J.
LaurentPoly parahoric_value(const ParabolicSubset& J, const WeightVec& lam,
                            const Permutation& w1, const Permutation& w2);

/// The closed Casselman-Shalika form for psi^J_1 at a dominant weight:
/// prod over Levi positive roots of (1 - v z^{-alpha}) times the Levi character.
LaurentPoly parahoric_cs_value(const ParabolicSubset& J, const WeightVec& lam, int r);

/// Spherical value: sum over all w of phi_w(z; varpi^{-lambda}).
LaurentPoly spherical_value(const WeightVec& lam, int r);

/// Li's variant: sum over w of (-v)^{-l(w)} phi_w(z; varpi^{-lambda}).
LaurentPoly li_value(const WeightVec& lam, int r);

LaurentPoly value(const WhittakerQuery& q);

} // namespace whitlat

#endif
