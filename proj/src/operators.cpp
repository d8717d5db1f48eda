#include "whitlat/operators.hpp"

namespace whitlat {

namespace {

// z^{alpha_i} = z_i / z_{i+1} as a monomial, optionally to a power.
LaurentPoly z_alpha(int rank, int i, int power = 1) {
    std::vector<int> e(rank, 0);
    e[i - 1] = power;
    e[i] = -power;
    return LaurentPoly::monomial(rank, e, 0, 1);
}

} // namespace

LaurentPoly apply(OperatorKind kind, int i, const LaurentPoly& f) {
    const int r = f.rank();
    if (i < 1 || i >= r) throw std::invalid_argument("operator index out of range");
    const Permutation si = Permutation::simple(r, i);
    const LaurentPoly g = act_variables(f, si);
    const LaurentPoly za = z_alpha(r, i);
    const LaurentPoly za_inv = z_alpha(r, i, -1);
    const LaurentPoly one = LaurentPoly::constant(r, 1);
    const LaurentPoly vv = LaurentPoly::v(r, kind.invert_v ? -1 : 1);
    const LaurentPoly vv_inv = LaurentPoly::v(r, kind.invert_v ? 1 : -1);

    LaurentPoly numer(r);
    switch (kind.tag) {
    case OpTag::T:
        // (1-v) f - g + v z^{-a} g
        numer = (one - vv) * f - g + vv * za_inv * g;
        break;
    case OpTag::TInv:
        // z^{-a} g - z^a f - v^{-1} g + v^{-1} z^a f
        numer = za_inv * g - za * f - vv_inv * g + vv_inv * za * f;
        break;
    case OpTag::L:
        // (1-v) f - g + v z^a g
        numer = (one - vv) * f - g + vv * za * g;
        break;
    case OpTag::Partial:
        numer = za * f - g;
        break;
    case OpTag::PartialCirc:
        numer = f - g;
        break;
    }
    return divide_exact(numer, za - one);
}

LaurentPoly apply_word(OperatorKind kind, const std::vector<std::pair<int, int>>& word,
                       const LaurentPoly& f) {
    LaurentPoly out = f;
    for (const auto& [i, sign] : word) {
        if (sign >= 0) {
            out = apply(kind, i, out);
        } else {
            if (kind.tag != OpTag::T)
                throw std::invalid_argument("inverse only defined for the T family");
            out = apply({OpTag::TInv, kind.invert_v}, i, out);
        }
    }
    return out;
}

LaurentPoly apply_for_element(OperatorKind kind, const Permutation& w, const LaurentPoly& f) {
    const std::vector<int> word = reduced_word(w);
    LaurentPoly out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(kind, *it, out);
    return out;
}

LaurentPoly conjugated_T(int i, const LaurentPoly& f, bool inverse) {
    const int r = f.rank();
    const LaurentPoly zrho = LaurentPoly::z_weight(r, rho(r));
    const LaurentPoly zrho_inv = LaurentPoly::z_weight(r, negate(rho(r)));
    const OperatorKind kind{inverse ? OpTag::TInv : OpTag::T, false};
    return zrho * apply(kind, i, zrho_inv * f);
}

} // namespace whitlat
