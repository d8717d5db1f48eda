#include "whitlat/verify.hpp"

#include "whitlat/macdonald.hpp"
#include "whitlat/whittaker.hpp"

namespace whitlat {

namespace {

void enumerate_parts(int r, int max_part, int bound, WeightVec& acc,
                     std::vector<WeightVec>& out) {
    if (static_cast<int>(acc.size()) == r) {
        out.push_back(acc);
        return;
    }
    for (int p = bound; p >= 0; --p) {
        acc.push_back(p);
        enumerate_parts(r, max_part, p, acc, out);
        acc.pop_back();
    }
}

LaurentPoly z_rho(int r) { return LaurentPoly::z_weight(r, rho(r)); }

std::string weight_str(const WeightVec& lam) {
    std::string out;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lam[i]);
    }
    return out;
}

std::vector<ParabolicSubset> all_parabolic_subsets(int r) {
    std::vector<ParabolicSubset> out;
    const int n = r - 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        ParabolicSubset J;
        for (int i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1))) J.insert(i);
        out.push_back(J);
    }
    return out;
}

} // namespace

std::vector<WeightVec> almost_dominant_candidates(int r, int max_part) {
    std::vector<WeightVec> parts;
    WeightVec acc;
    enumerate_parts(r, max_part, max_part, acc, parts);
    std::vector<WeightVec> out;
    const WeightVec neg_rho = negate(rho(r));
    for (const WeightVec& p : parts) out.push_back(add(p, neg_rho));
    return out;
}

VerifyReport check_coloredwhittaker(int r, int max_parts) {
    VerifyReport report;
    const std::vector<Permutation> W = all_permutations(r);
    for (const WeightVec& lam : almost_dominant_candidates(r, max_parts)) {
        for (const Permutation& w2 : W) {
            if (!is_w_almost_dominant(lam, w2)) continue;
            for (const Permutation& w1 : W) {
                const SystemSpec spec = build_system(r, lam, w1, w2);
                const LaurentPoly lattice = partition_function(spec);
                const LaurentPoly whittaker = z_rho(r) * iwahori_value(lam, w1, w2);
                ++report.cases_checked;
                if (lattice != whittaker) {
                    report.pass = false;
                    report.counterexample = "lam=" + weight_str(lam) +
                                            " w1=" + w1.to_string() +
                                            " w2=" + w2.to_string();
                    return report;
                }
            }
        }
    }
    return report;
}

VerifyReport check_parahoric(int r, int max_parts) {
    VerifyReport report;
    auto fail = [&](const std::string& what) {
        report.pass = false;
        report.counterexample = what;
        return report;
    };

    for (const ParabolicSubset& J : all_parabolic_subsets(r)) {
        const std::vector<int> flag = flag_for_parabolic(J, r);
        const std::vector<Permutation> WJreps = min_coset_reps(J, r);
        const Permutation id(r);

        for (const WeightVec& lam : almost_dominant_candidates(r, max_parts)) {
            // Lattice model vs operator sum, w1, w2 in W^J.
            for (const Permutation& w2 : WJreps) {
                if (!is_w_almost_dominant(lam, w2)) continue;
                for (const Permutation& w1 : WJreps) {
                    const SystemSpec spec = build_system(r, lam, w1, w2, flag);
                    const LaurentPoly lattice = partition_function(spec);
                    const LaurentPoly psi = z_rho(r) * parahoric_value(J, lam, w1, w2);
                    ++report.cases_checked;
                    if (lattice != psi)
                        return fail("lattice/psi mismatch J size " +
                                    std::to_string(J.size()) + " lam=" + weight_str(lam) +
                                    " w1=" + w1.to_string() + " w2=" + w2.to_string());
                }
            }

            if (!is_dominant(lam)) continue;

            // Casselman-Shalika form at w1 = w2 = 1.
            ++report.cases_checked;
            if (parahoric_cs_value(J, lam, r) != parahoric_value(J, lam, id, id))
                return fail("paracs mismatch lam=" + weight_str(lam));

            const LaurentPoly psi1 = parahoric_value(J, lam, id, id);
            for (const Permutation& w : WJreps) {
                const LaurentPoly psiw = parahoric_value(J, lam, w, id);
                // psi^J_w = T_w psi^J_1.
                ++report.cases_checked;
                if (psiw != apply_for_element({OpTag::T, false}, w, psi1))
                    return fail("T_w transport fails w=" + w.to_string());

                for (int i = 1; i < r; ++i) {
                    const Permutation si = Permutation::simple(r, i);
                    const Permutation conj = w.inverse() * si * w;
                    if (in_parabolic(conj, J)) {
                        // Divisible by 1 - v z^{-alpha_i}, quotient s_i-invariant.
                        std::vector<int> e(r, 0);
                        e[i - 1] = -1;
                        e[i] = 1;
                        const LaurentPoly divisor = LaurentPoly::constant(r, 1) -
                                                    LaurentPoly::monomial(r, e, 1, 1);
                        ++report.cases_checked;
                        try {
                            const LaurentPoly quot = divide_exact(psiw, divisor);
                            if (act_variables(quot, si) != quot)
                                return fail("first-case quotient not s_i-invariant");
                        } catch (const NotDivisibleError&) {
                            return fail("first-case divisibility fails w=" + w.to_string() +
                                        " i=" + std::to_string(i));
                        }
                    } else {
                        // psi^J_{s_i w} = T_i^{+-1} psi^J_w.
                        const Permutation siw = si * w;
                        const bool ascent = siw.length() > w.length();
                        const LaurentPoly lhs = parahoric_value(J, lam, siw, id);
                        const LaurentPoly rhs =
                            apply({ascent ? OpTag::T : OpTag::TInv, false}, i, psiw);
                        ++report.cases_checked;
                        if (lhs != rhs)
                            return fail("second-case recursion fails w=" + w.to_string() +
                                        " i=" + std::to_string(i));
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport check_tokuyama(int max_r, int max_parts) {
    VerifyReport report;
    for (int r = 1; r <= max_r; ++r) {
        const std::vector<int> flag(r, 1);
        const Permutation id(r);
        for (const WeightVec& lam : almost_dominant_candidates(r, max_parts)) {
            if (!is_dominant(lam)) continue;
            const SystemSpec spec = build_system(r, lam, id, id, flag);
            const LaurentPoly lattice = partition_function(spec);
            LaurentPoly expected = z_rho(r) * schur(lam, r);
            for (int i = 1; i <= r; ++i) {
                for (int j = i + 1; j <= r; ++j) {
                    std::vector<int> e(r, 0);
                    e[i - 1] = -1;
                    e[j - 1] = 1;
                    expected *= LaurentPoly::constant(r, 1) -
                                LaurentPoly::monomial(r, e, 1, 1);
                }
            }
            ++report.cases_checked;
            if (lattice != expected) {
                report.pass = false;
                report.counterexample = "r=" + std::to_string(r) + " lam=" + weight_str(lam);
                return report;
            }
        }
    }
    return report;
}

VerifyReport check_hall_littlewood(int max_r, int max_parts) {
    VerifyReport report;
    for (int r = 1; r <= max_r; ++r) {
        for (const WeightVec& lam : almost_dominant_candidates(r, max_parts)) {
            if (!is_dominant(lam)) continue;
            const LaurentPoly lhs = z_rho(r) * li_value(lam, r);
            const LaurentPoly p_mu = hall_littlewood(add(lam, rho(r)), r);
            const LaurentPoly rhs = act_variables(p_mu, Permutation(r), /*invert_v=*/true);
            ++report.cases_checked;
            if (lhs != rhs) {
                report.pass = false;
                report.counterexample = "r=" + std::to_string(r) + " lam=" + weight_str(lam);
                return report;
            }
        }
    }
    return report;
}

VerifyReport check_strict_reduction_sweep(int r, int max_parts) {
    VerifyReport report;
    for (const ParabolicSubset& J : all_parabolic_subsets(r)) {
        if (J.empty()) continue;
        const std::vector<Permutation> WJreps = min_coset_reps(J, r);
        for (int m : J) {
            if (J.count(m + 1)) continue; // m must end its block
            for (const WeightVec& lam : almost_dominant_candidates(r, max_parts)) {
                for (const Permutation& w2 : WJreps) {
                    if (!is_w_almost_dominant(lam, w2)) continue;
                    for (const Permutation& w1 : WJreps) {
                        const VerifyReport one =
                            verify_strict_reduction(r, J, m, lam, w1, w2);
                        report.cases_checked += 1;
                        if (!one.pass) {
                            report.pass = false;
                            report.counterexample =
                                one.counterexample + " at lam=" + weight_str(lam) +
                                " w1=" + w1.to_string() + " w2=" + w2.to_string();
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace whitlat
