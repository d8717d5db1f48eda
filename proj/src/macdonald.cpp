#include "whitlat/macdonald.hpp"

#include <algorithm>

#include "whitlat/whittaker.hpp"

namespace whitlat {

namespace {

// Vandermonde prod_{i<j} (z_i - z_j) = z^rho prod_{alpha>0} (1 - z^{-alpha}).
LaurentPoly vandermonde(int r) {
    LaurentPoly out = LaurentPoly::constant(r, 1);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            out *= LaurentPoly::z(r, i) - LaurentPoly::z(r, j);
    return out;
}

} // namespace

LaurentPoly schur(const WeightVec& lam, int r) {
    if (!is_dominant(lam)) throw std::invalid_argument("lambda must be dominant");
    return apply_for_element({OpTag::Partial, false}, Permutation::longest(r),
                             LaurentPoly::z_weight(r, lam));
}

LaurentPoly levi_character(const ParabolicSubset& J, const WeightVec& lam, int r) {
    if (!is_dominant(lam)) throw std::invalid_argument("lambda must be dominant");
    return apply_for_element({OpTag::Partial, false}, longest_in_parabolic(J, r),
                             LaurentPoly::z_weight(r, lam));
}

LaurentPoly theta(const WeightVec& lam, int r) {
    LaurentPoly numer(r);
    const LaurentPoly top = LaurentPoly::z_weight(r, add(lam, rho(r)));
    for (const Permutation& w : all_permutations(r)) {
        const Rat sign = (w.length() % 2 == 0) ? 1 : -1;
        numer += act_variables(top, w).scaled(sign);
    }
    return divide_exact(numer, vandermonde(r));
}

LaurentPoly hall_littlewood(const WeightVec& mu, int r) {
    for (size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] <= mu[i + 1])
            throw std::invalid_argument("mu must be strictly decreasing");
    if (!mu.empty() && mu.back() < 0) throw std::invalid_argument("mu must be nonnegative");
    // R_mu = sum_w w( z^mu prod_{i<j} (z_i - t z_j) / (z_i - z_j) )
    //      = [ sum_w (-1)^{l(w)} w( z^mu prod_{i<j} (z_i - t z_j) ) ] / Vandermonde,
    // and P_mu = R_mu because mu is strongly dominant.
    LaurentPoly inner = LaurentPoly::z_weight(r, mu);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            inner *= LaurentPoly::z(r, i) - LaurentPoly::v(r, 1) * LaurentPoly::z(r, j);
    LaurentPoly numer(r);
    for (const Permutation& w : all_permutations(r)) {
        const Rat sign = (w.length() % 2 == 0) ? 1 : -1;
        numer += act_variables(inner, w).scaled(sign);
    }
    return divide_exact(numer, vandermonde(r));
}

LaurentPoly e_inf(const WeightVec& nu, int r) {
    if (static_cast<int>(nu.size()) != r) throw std::invalid_argument("length mismatch");
    WeightVec sorted = nu;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw std::invalid_argument("composition parts must be distinct");
    if (sorted.back() < 0) throw std::invalid_argument("parts must be nonnegative");
    // Unique u with u(sorted) = nu, then w = w0 u satisfies w0 w(lam+rho) = nu.
    // Part sorted[i] lands at position u(i+1) of nu.
    std::vector<int> img(r);
    for (int i = 0; i < r; ++i) {
        const auto it = std::find(nu.begin(), nu.end(), sorted[i]);
        img[i] = static_cast<int>(it - nu.begin()) + 1;
    }
    const Permutation u{img};
    const Permutation w0 = Permutation::longest(r);
    const Permutation w = w0 * u;
    const WeightVec lam = add(sorted, negate(rho(r)));

    const LaurentPoly zrho = LaurentPoly::z_weight(r, rho(r));
    const LaurentPoly phi = iwahori_value(lam, w, Permutation(r));
    const int l = w.length();
    const Rat sign = (l % 2 == 0) ? 1 : -1;
    return act_variables(zrho * phi, w0).scaled(sign) * LaurentPoly::v(r, -l);
}

LaurentPoly prescribed_symmetry_sum(const ParabolicSubset& J, const WeightVec& eta, int r) {
    if (!is_dominant(eta)) throw std::invalid_argument("eta must be dominant");
    LaurentPoly out(r);
    const LaurentPoly zeta = LaurentPoly::z_weight(r, eta);
    for (const Permutation& w : subgroup_elements(J, r)) {
        const int l = w.length();
        const Rat sign = (l % 2 == 0) ? 1 : -1;
        out += apply_for_element({OpTag::L, false}, w, zeta).scaled(sign) *
               LaurentPoly::v(r, -l);
    }
    return out;
}

} // namespace whitlat
