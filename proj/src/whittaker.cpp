#include "whitlat/whittaker.hpp"

#include "whitlat/macdonald.hpp"

namespace whitlat {

LaurentPoly iwahori_value(const WeightVec& lam, const Permutation& w1, const Permutation& w2) {
    const int r = w1.degree();
    if (w2.degree() != r || static_cast<int>(lam.size()) != r)
        throw std::invalid_argument("query dimension mismatch");
    if (!is_w_almost_dominant(lam, w2)) return LaurentPoly::zero(r);
    const LaurentPoly base = LaurentPoly::v(r, w2.length()) * LaurentPoly::z_weight(r, lam);
    return apply_word({OpTag::T, false}, weyl_path(w2, w1), base);
}

LaurentPoly parahoric_value(const ParabolicSubset& J, const WeightVec& lam,
                            const Permutation& w1, const Permutation& w2) {
    const int r = w1.degree();
    if (!is_min_coset_rep(w1, J)) throw std::invalid_argument("w1 is not in W^J");
    LaurentPoly out(r);
    for (const Permutation& y : subgroup_elements(J, r))
        out += iwahori_value(lam, w1 * y, w2);
    return out;
}

LaurentPoly parahoric_cs_value(const ParabolicSubset& J, const WeightVec& lam, int r) {
    if (!is_dominant(lam)) throw std::invalid_argument("lambda must be dominant");
    LaurentPoly out = levi_character(J, lam, r);
    for (const auto& [a, b] : parabolic_positive_roots(J, r)) {
        std::vector<int> e(r, 0);
        e[a - 1] = -1;
        e[b - 1] = 1;
        const LaurentPoly factor =
            LaurentPoly::constant(r, 1) - LaurentPoly::monomial(r, e, 1, 1);
        out *= factor;
    }
    return out;
}

LaurentPoly spherical_value(const WeightVec& lam, int r) {
    LaurentPoly out(r);
    const Permutation id(r);
    for (const Permutation& w : all_permutations(r)) out += iwahori_value(lam, w, id);
    return out;
}

LaurentPoly li_value(const WeightVec& lam, int r) {
    LaurentPoly out(r);
    const Permutation id(r);
    for (const Permutation& w : all_permutations(r)) {
        const int l = w.length();
        const Rat sign = (l % 2 == 0) ? 1 : -1;
        out += iwahori_value(lam, w, id).scaled(sign) * LaurentPoly::v(r, -l);
    }
    return out;
}

LaurentPoly value(const WhittakerQuery& q) {
    if (q.J.empty()) return iwahori_value(q.lam, q.w1, q.w2);
    return parahoric_value(q.J, q.lam, q.w1, q.w2);
}

} // namespace whitlat
