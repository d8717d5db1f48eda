#include "whitlat/rmatrix.hpp"

#include <algorithm>

namespace whitlat {

namespace {

LaurentPoly one(int r) { return LaurentPoly::constant(r, 1); }
LaurentPoly q_pow(int r, int k) { return LaurentPoly::v(r, k); }
LaurentPoly v_sub(int r) { return LaurentPoly::v(r, 2); } // v = q^2

// z^{alpha_k} evaluated at the spectral tuple sigma(z).
LaurentPoly z_alpha_at(int r, int k, const Permutation& sigma) {
    const Permutation sinv = sigma.inverse();
    std::vector<int> e(r, 0);
    e[sinv(k) - 1] += 1;
    e[sinv(k + 1) - 1] -= 1;
    return LaurentPoly::monomial(r, e, 0, 1);
}

bool rf_is_zero(const RationalFn& f) { return f.num().is_zero(); }

} // namespace

IwahoriVector::IwahoriVector(int r, Permutation tag) : r_(r), tag_(std::move(tag)) {}

IwahoriVector IwahoriVector::phi(int r, const Permutation& w) {
    IwahoriVector out(r, Permutation(r));
    out.add(w, RationalFn(LaurentPoly::constant(r, 1)));
    return out;
}

void IwahoriVector::add(const Permutation& w, const RationalFn& c) {
    if (rf_is_zero(c)) return;
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
        coeffs_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (rf_is_zero(it->second)) coeffs_.erase(it);
    }
}

bool IwahoriVector::equals(const IwahoriVector& rhs) const {
    if (r_ != rhs.r_ || tag_ != rhs.tag_) return false;
    const RationalFn zero{LaurentPoly::zero(r_), LaurentPoly::constant(r_, 1)};
    for (const auto& [w, c] : coeffs_) {
        auto it = rhs.coeffs_.find(w);
        if (!rf_equal(c, it == rhs.coeffs_.end() ? zero : it->second)) return false;
    }
    for (const auto& [w, c] : rhs.coeffs_)
        if (!coeffs_.count(w) && !rf_is_zero(c)) return false;
    return true;
}

TensorVector::TensorVector(int r, Permutation tag) : r_(r), tag_(std::move(tag)) {}

TensorVector TensorVector::basis(int r, const std::vector<int>& tuple) {
    TensorVector out(r, Permutation(r));
    out.add(tuple, RationalFn(LaurentPoly::constant(r, 1)));
    return out;
}

void TensorVector::add(const std::vector<int>& tuple, const RationalFn& c) {
    if (static_cast<int>(tuple.size()) != r_)
        throw std::invalid_argument("tuple length mismatch");
    for (int x : tuple)
        if (x < 1 || x > r_) throw std::invalid_argument("tuple entry out of range");
    if (rf_is_zero(c)) return;
    auto it = coeffs_.find(tuple);
    if (it == coeffs_.end()) {
        coeffs_.emplace(tuple, c);
    } else {
        it->second = it->second + c;
        if (rf_is_zero(it->second)) coeffs_.erase(it);
    }
}

bool TensorVector::equals(const TensorVector& rhs) const {
    if (r_ != rhs.r_ || tag_ != rhs.tag_) return false;
    const RationalFn zero{LaurentPoly::zero(r_), LaurentPoly::constant(r_, 1)};
    for (const auto& [t, c] : coeffs_) {
        auto it = rhs.coeffs_.find(t);
        if (!rf_equal(c, it == rhs.coeffs_.end() ? zero : it->second)) return false;
    }
    for (const auto& [t, c] : rhs.coeffs_)
        if (!coeffs_.count(t) && !rf_is_zero(c)) return false;
    return true;
}

IwahoriVector intertwine(int k, const IwahoriVector& vec) {
    const int r = vec.r();
    if (k < 1 || k >= r) throw std::invalid_argument("intertwiner index out of range");
    const LaurentPoly za = z_alpha_at(r, k, vec.tag());
    const LaurentPoly v = v_sub(r);
    const LaurentPoly den = one(r) - v * za;
    const Permutation sk = Permutation::simple(r, k);
    IwahoriVector out(r, sk * vec.tag());
    for (const auto& [w, f] : vec.coeffs()) {
        const bool ascent = is_left_ascent(w, k);
        const Permutation skw = sk * w;
        if (ascent) {
            out.add(w, f * RationalFn{one(r) - v, den});
            out.add(skw, f * RationalFn{one(r) - za, den});
        } else {
            out.add(w, f * RationalFn{za * (one(r) - v), den});
            out.add(skw, f * RationalFn{v * (one(r) - za), den});
        }
    }
    return out;
}

TensorVector theta_map(const IwahoriVector& vec) {
    const int r = vec.r();
    TensorVector out(r, vec.tag());
    for (const auto& [w, c] : vec.coeffs()) {
        const Permutation winv = w.inverse();
        std::vector<int> tuple(r);
        for (int i = 1; i <= r; ++i) tuple[i - 1] = winv(i);
        out.add(tuple, c);
    }
    return out;
}

TensorVector r_col_apply(int k, const TensorVector& vec) {
    const int r = vec.r();
    if (k < 1 || k >= r) throw std::invalid_argument("R-matrix index out of range");
    const LaurentPoly za = z_alpha_at(r, k, vec.tag());
    const LaurentPoly v = v_sub(r);
    const LaurentPoly den = one(r) - v * za;
    const Permutation sk = Permutation::simple(r, k);
    TensorVector out(r, sk * vec.tag());
    for (const auto& [tuple, c] : vec.coeffs()) {
        const int x = tuple[k - 1], y = tuple[k];
        if (x == y) {
            // equal colors pass through with weight 1
            out.add(tuple, c);
            continue;
        }
        std::vector<int> swapped = tuple;
        std::swap(swapped[k - 1], swapped[k]);
        if (x < y) {
            out.add(tuple, c * RationalFn{one(r) - v, den});
            out.add(swapped, c * RationalFn{one(r) - za, den});
        } else {
            out.add(tuple, c * RationalFn{(one(r) - v) * za, den});
            out.add(swapped, c * RationalFn{v * (one(r) - za), den});
        }
    }
    return out;
}

TensorVector jimbo_r_apply(int k, const TensorVector& vec) {
    const int r = vec.r();
    if (k < 1 || k >= r) throw std::invalid_argument("R-matrix index out of range");
    const LaurentPoly za = z_alpha_at(r, k, vec.tag());
    const LaurentPoly q = q_pow(r, 1);
    const LaurentPoly qinv = q_pow(r, -1);
    const LaurentPoly den = one(r) - q_pow(r, 2) * za; // 1 - q^2 z^alpha
    const LaurentPoly twist = -q;
    const Permutation sk = Permutation::simple(r, k);
    TensorVector out(r, sk * vec.tag());
    for (const auto& [tuple, c] : vec.coeffs()) {
        const int x = tuple[k - 1], y = tuple[k];
        if (x == y)
            throw std::invalid_argument("Jimbo action is restricted to alternating tuples");
        std::vector<int> swapped = tuple;
        std::swap(swapped[k - 1], swapped[k]);
        // Entries of R_q from the three sums of the Jimbo formula, then the
        // overall Drinfeld twist by -q.
        LaurentPoly keep_num(r), swap_num(r);
        if (x > y) {
            swap_num = (-q) * (one(r) - za);
            keep_num = za * (q - qinv);
        } else {
            swap_num = (-qinv) * (one(r) - za);
            keep_num = q - qinv;
        }
        out.add(tuple, c * RationalFn{twist * keep_num, den});
        out.add(swapped, c * RationalFn{twist * swap_num, den});
    }
    return out;
}

RVerifyReport verify_commuting_diagram(int r) {
    RVerifyReport report;
    for (const Permutation& w : all_permutations(r)) {
        const IwahoriVector phi = IwahoriVector::phi(r, w);
        for (int k = 1; k < r; ++k) {
            const TensorVector lhs = theta_map(intertwine(k, phi));
            const TensorVector rhs = r_col_apply(k, theta_map(phi));
            ++report.cases_checked;
            if (!lhs.equals(rhs)) {
                report.pass = false;
                report.counterexample =
                    "theta square fails at w=" + w.to_string() + " k=" + std::to_string(k);
                return report;
            }
            const TensorVector jimbo = jimbo_r_apply(k, theta_map(phi));
            ++report.cases_checked;
            if (!rhs.equals(jimbo)) {
                report.pass = false;
                report.counterexample =
                    "xi square fails at w=" + w.to_string() + " k=" + std::to_string(k);
                return report;
            }
        }
    }
    return report;
}

RVerifyReport verify_cocycle(int r) {
    RVerifyReport report;
    for (const Permutation& w : all_permutations(r)) {
        const IwahoriVector phi = IwahoriVector::phi(r, w);
        for (int k = 1; k < r; ++k) {
            const IwahoriVector back = intertwine(k, intertwine(k, phi));
            ++report.cases_checked;
            if (!back.equals(phi)) {
                report.pass = false;
                report.counterexample =
                    "involution fails at w=" + w.to_string() + " k=" + std::to_string(k);
                return report;
            }
        }
    }
    // Braid compatibility: two reduced words for w0 give one map.
    const Permutation w0 = Permutation::longest(r);
    std::vector<int> word1 = reduced_word(w0);
    std::vector<int> word2;
    for (int i : word1) word2.push_back(r - i);
    for (const Permutation& w : all_permutations(r)) {
        IwahoriVector a = IwahoriVector::phi(r, w);
        IwahoriVector b = a;
        for (auto it = word1.rbegin(); it != word1.rend(); ++it) a = intertwine(*it, a);
        for (auto it = word2.rbegin(); it != word2.rend(); ++it) b = intertwine(*it, b);
        ++report.cases_checked;
        if (!a.equals(b)) {
            report.pass = false;
            report.counterexample = "braid compatibility fails at w=" + w.to_string();
            return report;
        }
    }
    return report;
}

RVerifyReport uncolored_factor_check(int r) {
    RVerifyReport report;
    const LaurentPoly v = v_sub(r);
    for (int k = 1; k < r; ++k) {
        const LaurentPoly zk = LaurentPoly::z(r, k);
        const LaurentPoly zk1 = LaurentPoly::z(r, k + 1);
        const LaurentPoly za = z_alpha_at(r, k, Permutation(r));
        const LaurentPoly za_inv = divide_exact(one(r), za);
        const RationalFn factor{one(r) - v * za_inv, one(r) - v * za};
        // uncolored weight of R(z_{k+1}, z_k) is z_k - v z_{k+1}; the monomial
        // scalar pinning the proportionality is z_{k+1}/z_k.
        const RationalFn scaled{(zk - v * zk1) * zk1, (zk1 - v * zk) * zk};
        ++report.cases_checked;
        if (!rf_equal(factor, scaled)) {
            report.pass = false;
            report.counterexample = "factor mismatch at k=" + std::to_string(k);
            return report;
        }
    }
    return report;
}

} // namespace whitlat
