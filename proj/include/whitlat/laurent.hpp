#ifndef WHITLAT_LAURENT_HPP
#define WHITLAT_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitlat/weyl.hpp"

namespace whitlat {

/// Exact rational coefficient type.
using Rat = boost::multiprecision::cpp_rational;

/// Exponent vector: entries 0..r-1 for z_1..z_r, entry r for the deformation
/// variable v.  Exponents may be negative.
using Mono = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically.  Fixes the canonical printing order.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        long ga = 0, gb = 0;
        for (int e : a) ga += e;
        for (int e : b) gb += e;
        if (ga != gb) return ga > gb;
        return a > b;
    }
};

struct NotDivisibleError : std::runtime_error {
    NotDivisibleError() : std::runtime_error("polynomial division is not exact") {}
};

/// Multivariate Laurent polynomial in z_1..z_r and v with exact rational
/// coefficients.  Zero coefficients are never stored; values are immutable in
/// spirit (all operations return new values).
class LaurentPoly {
public:
    using TermMap = std::map<Mono, Rat, MonoOrder>;

    explicit LaurentPoly(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("rank must be positive");
    }

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
    static LaurentPoly constant(int rank, const Rat& c);
    static LaurentPoly monomial(int rank, const std::vector<int>& zexp, int vexp,
                                const Rat& coeff);
    /// z_i, 1-based.
    static LaurentPoly z(int rank, int i, int power = 1);
    /// v^power.
    static LaurentPoly v(int rank, int power = 1);
    /// z^lam for a weight vector lam.
    static LaurentPoly z_weight(int rank, const WeightVec& lam);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool operator==(const LaurentPoly& rhs) const {
        return rank_ == rhs.rank_ && terms_ == rhs.terms_;
    }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    LaurentPoly scaled(const Rat& c) const;

    /// Insert a term, accumulating and pruning zeros.
    void add_term(const Mono& m, const Rat& c);

private:
    void check_rank(const LaurentPoly& rhs) const {
        if (rank_ != rhs.rank_) throw std::invalid_argument("rank mismatch");
    }

    int rank_;
    TermMap terms_;
};

/// Substitute z_i -> z_{w(i)}; monomials transform as z^lam -> z^{w(lam)}.
/// If invert_v, additionally negate every v exponent.
LaurentPoly act_variables(const LaurentPoly& p, const Permutation& w, bool invert_v = false);

/// Exact quotient q with q * den == num; throws NotDivisibleError otherwise.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// ---------------------------------------------------------------------------

/// Unreduced fraction of Laurent polynomials.  Equality is defined by
/// cross-multiplication; fractions are never put in lowest terms.
class RationalFn {
public:
    RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.rank() != den_.rank()) throw std::invalid_argument("rank mismatch");
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    }
    explicit RationalFn(LaurentPoly num)
        : num_(std::move(num)), den_(LaurentPoly::constant(num_.rank(), 1)) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int rank() const { return num_.rank(); }

    RationalFn operator+(const RationalFn& rhs) const {
        return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
    }
    RationalFn operator-(const RationalFn& rhs) const {
        return {num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
    }
    RationalFn operator*(const RationalFn& rhs) const {
        return {num_ * rhs.num_, den_ * rhs.den_};
    }
    RationalFn operator-() const { return {-num_, den_}; }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// a/b == c/d iff a*d == c*b.
bool rf_equal(const RationalFn& a, const RationalFn& b);

} // namespace whitlat

#endif
