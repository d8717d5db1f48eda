#include "whitlat/laurent.hpp"

#include <algorithm>
#include <limits>

namespace whitlat {

LaurentPoly LaurentPoly::constant(int rank, const Rat& c) {
    LaurentPoly p(rank);
    if (c != 0) p.terms_[Mono(rank + 1, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const std::vector<int>& zexp, int vexp,
                                  const Rat& coeff) {
    if (static_cast<int>(zexp.size()) != rank)
        throw std::invalid_argument("exponent vector length does not match rank");
    LaurentPoly p(rank);
    if (coeff == 0) return p;
    Mono m(rank + 1, 0);
    std::copy(zexp.begin(), zexp.end(), m.begin());
    m[rank] = vexp;
    p.terms_[m] = coeff;
    return p;
}

LaurentPoly LaurentPoly::z(int rank, int i, int power) {
    if (i < 1 || i > rank) throw std::invalid_argument("variable index out of range");
    std::vector<int> zexp(rank, 0);
    zexp[i - 1] = power;
    return monomial(rank, zexp, 0, 1);
}

LaurentPoly LaurentPoly::v(int rank, int power) {
    return monomial(rank, std::vector<int>(rank, 0), power, 1);
}

LaurentPoly LaurentPoly::z_weight(int rank, const WeightVec& lam) {
    if (static_cast<int>(lam.size()) != rank)
        throw std::invalid_argument("weight length does not match rank");
    return monomial(rank, lam, 0, 1);
}

void LaurentPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    check_rank(rhs);
    LaurentPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    check_rank(rhs);
    LaurentPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    check_rank(rhs);
    LaurentPoly out(rank_);
    Mono m(rank_ + 1);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (int k = 0; k <= rank_; ++k) m[k] = ma[k] + mb[k];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly out(rank_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

LaurentPoly act_variables(const LaurentPoly& p, const Permutation& w, bool invert_v) {
    if (w.degree() != p.rank()) throw std::invalid_argument("rank mismatch");
    LaurentPoly out(p.rank());
    const int r = p.rank();
    Mono m(r + 1);
    for (const auto& [mono, c] : p.terms()) {
        for (int i = 1; i <= r; ++i) m[w(i) - 1] = mono[i - 1];
        m[r] = invert_v ? -mono[r] : mono[r];
        out.add_term(m, c);
    }
    return out;
}

namespace {

int min_exp(const LaurentPoly& p, int var) {
    int lo = std::numeric_limits<int>::max();
    for (const auto& [m, c] : p.terms()) lo = std::min(lo, m[var]);
    return lo;
}

int max_exp(const LaurentPoly& p, int var) {
    int hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : p.terms()) hi = std::max(hi, m[var]);
    return hi;
}

LaurentPoly shift(const LaurentPoly& p, int var, int by) {
    if (by == 0) return p;
    LaurentPoly out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        Mono m2 = m;
        m2[var] += by;
        out.add_term(m2, c);
    }
    return out;
}

/// Coefficient of x_var^deg in p, as a polynomial with that exponent zeroed.
LaurentPoly slice(const LaurentPoly& p, int var, int deg) {
    LaurentPoly out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == deg) {
            Mono m2 = m;
            m2[var] = 0;
            out.add_term(m2, c);
        }
    }
    return out;
}

} // namespace

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly::zero(num.rank());
    if (num.rank() != den.rank()) throw std::invalid_argument("rank mismatch");
    const int r = num.rank();

    // Monomial divisor: divide every term.
    if (den.term_count() == 1) {
        const auto& [dm, dc] = *den.terms().begin();
        LaurentPoly out(r);
        for (const auto& [m, c] : num.terms()) {
            Mono q = m;
            for (int k = 0; k <= r; ++k) q[k] -= dm[k];
            out.add_term(q, c / dc);
        }
        return out;
    }

    // Pick a variable in which den genuinely spreads and long-divide,
    // viewing both as univariate with Laurent-polynomial coefficients.
    int var = -1;
    for (int k = 0; k <= r; ++k) {
        if (max_exp(den, k) > min_exp(den, k)) { var = k; break; }
    }
    // den has >1 term, so some variable spreads.
    const int dmax = max_exp(den, var);
    const int dmin = min_exp(den, var);
    const LaurentPoly den_lead = slice(den, var, dmax);

    LaurentPoly rem = num;
    LaurentPoly quo(r);
    while (!rem.is_zero()) {
        const int nmax = max_exp(rem, var);
        const int nmin = min_exp(rem, var);
        if (nmax - dmax < nmin - dmin) throw NotDivisibleError();
        const LaurentPoly lead = slice(rem, var, nmax);
        const LaurentPoly coeff = divide_exact(lead, den_lead);
        const LaurentPoly qterm = shift(coeff, var, nmax - dmax);
        quo += qterm;
        rem -= qterm * den;
    }
    return quo;
}

bool rf_equal(const RationalFn& a, const RationalFn& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    return a.num() * b.den() == b.num() * a.den();
}

} // namespace whitlat
