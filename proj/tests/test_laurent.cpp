#include "doctest.h"

#include "whitlat/laurent.hpp"
#include "whitlat/render.hpp"

#include "helpers.hpp"

using namespace whitlat;
using namespace whitlat::testing;

namespace {

// Independent multiplication oracle: compute each coefficient of the product
// as an explicit convolution over the term maps, never calling operator*.
LaurentPoly oracle_mul(const LaurentPoly& a, const LaurentPoly& b) {
    const int r = a.rank();
    std::map<Mono, Rat> acc;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Mono m(r + 1);
            for (int k = 0; k <= r; ++k) m[k] = ma[k] + mb[k];
            acc[m] += ca * cb;
        }
    }
    LaurentPoly out(r);
    for (const auto& [m, c] : acc) out.add_term(m, c);
    return out;
}

} // namespace

TEST_CASE("monomial construction") {
    CHECK(LaurentPoly::monomial(2, {1, 0}, 0, 1) == zvar(2, 1));
    CHECK(LaurentPoly::monomial(2, {0, 0}, 0, 0).is_zero());
    // ground-state Boltzmann weight z^{lam+rho} for lam=(5,2,0)
    const LaurentPoly gs = LaurentPoly::monomial(3, {7, 3, 0}, 0, 1);
    CHECK(gs == zvar(3, 1, 7) * zvar(3, 2, 3));
    CHECK_THROWS_AS(LaurentPoly::monomial(2, {1, 0, 0}, 0, 1), std::invalid_argument);
}

TEST_CASE("basic arithmetic") {
    const LaurentPoly z1 = zvar(2, 1), z2 = zvar(2, 2), v = vvar(2);
    CHECK((z1 + (-z1)).is_zero());

    // frozen from the term-by-term oracle
    const LaurentPoly prod = (z1 + z2) * (z1 - v * z2);
    LaurentPoly expected =
        zvar(2, 1, 2) + z1 * z2 - v * z1 * z2 - v * zvar(2, 2, 2);
    CHECK(prod == expected);
    CHECK(prod == oracle_mul(z1 + z2, z1 - v * z2));

    std::mt19937 rng(20240811);
    for (int t = 0; t < 50; ++t) {
        const LaurentPoly p = random_poly(2, rng);
        CHECK(p * cpoly(2, 1) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(987654);
    for (int t = 0; t < 200; ++t) {
        const LaurentPoly a = random_poly(3, rng), b = random_poly(3, rng),
                          c = random_poly(3, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == oracle_mul(a, b));
    }
}

TEST_CASE("act_variables") {
    const Permutation s1 = Permutation::simple(2, 1);
    CHECK(act_variables(zvar(2, 1, 2) * vvar(2), s1) == zvar(2, 2, 2) * vvar(2));
    CHECK(act_variables(vvar(2), Permutation(2), true) == vvar(2, -1));
    CHECK(act_variables(zvar(3, 1) * zvar(3, 2, 2), Permutation::longest(3)) ==
          zvar(3, 3) * zvar(3, 2, 2));

    std::mt19937 rng(5150);
    for (const Permutation& w : all_permutations(3)) {
        for (int t = 0; t < 10; ++t) {
            const LaurentPoly p = random_poly(3, rng), q = random_poly(3, rng);
            CHECK(act_variables(p * q, w) == act_variables(p, w) * act_variables(q, w));
            CHECK(act_variables(p + q, w) == act_variables(p, w) + act_variables(q, w));
        }
    }
}

TEST_CASE("divide_exact") {
    const LaurentPoly z1 = zvar(2, 1), z2 = zvar(2, 2), v = vvar(2);
    CHECK(divide_exact(z1 * z1 - z2 * z2, z1 - z2) == z1 + z2);
    CHECK(divide_exact(z1 * z2, z1) == z2);
    CHECK_THROWS_AS(divide_exact(z1 + v, z1 - z2), NotDivisibleError);
    CHECK_THROWS_AS(divide_exact(z1, LaurentPoly::zero(2)), std::invalid_argument);

    std::mt19937 rng(424242);
    for (int t = 0; t < 100; ++t) {
        const LaurentPoly a = random_poly(2, rng);
        const LaurentPoly b = random_nonzero_poly(2, rng);
        CHECK(divide_exact(a * b, b) == a);
    }
    // Laurent shifts: divisor with negative exponents
    const LaurentPoly num = (z1 - z2) * (cpoly(2, 1) - v * zvar(2, 1, -1) * z2);
    CHECK(divide_exact(num, cpoly(2, 1) - v * zvar(2, 1, -1) * z2) == z1 - z2);
}

TEST_CASE("rational function equality") {
    const int r = 2;
    const LaurentPoly z1 = zvar(r, 1), z2 = zvar(r, 2), v = vvar(r);
    const LaurentPoly one = cpoly(r, 1);
    // 1/(1-x) == (1+x)/(1-x^2) with x = z1/z2, cleared to Laurent form
    const LaurentPoly x = LaurentPoly::monomial(r, {1, -1}, 0, 1);
    CHECK(rf_equal(RationalFn{one, one - x}, RationalFn{one + x, one - x * x}));
    CHECK_FALSE(rf_equal(RationalFn{v, one}, RationalFn{one, v}));
    CHECK(rf_equal(RationalFn{z1 - v * z2, z1},
                   RationalFn{one - v * z2 * zvar(r, 1, -1), one}));

    std::mt19937 rng(777);
    std::vector<RationalFn> samples;
    for (int t = 0; t < 12; ++t)
        samples.push_back(
            RationalFn{random_poly(r, rng), random_nonzero_poly(r, rng)});
    // equivalence relation: reflexive, symmetric, transitive
    for (const auto& a : samples) CHECK(rf_equal(a, a));
    for (const auto& a : samples)
        for (const auto& b : samples) CHECK(rf_equal(a, b) == rf_equal(b, a));
    for (const auto& a : samples)
        for (const auto& b : samples)
            for (const auto& c : samples)
                if (rf_equal(a, b) && rf_equal(b, c)) CHECK(rf_equal(a, c));
}

TEST_CASE("rendering and JSON round trip") {
    const LaurentPoly p = zvar(3, 1, 2) * zvar(3, 2) * zvar(3, 3, 2) * vvar(3);
    CHECK(to_string(p) == "v*z1^2*z2*z3^2");
    CHECK(to_string(LaurentPoly::monomial(3, {7, 3, 0}, 0, 1)) == "z1^7*z2^3");
    CHECK(to_string(LaurentPoly::zero(2)) == "0");
    // graded order puts the degree-2 term v*z2 first
    CHECK(to_string(zvar(2, 2) - vvar(2) * zvar(2, 2)) == "-v*z2 + z2");

    std::mt19937 rng(31337);
    for (int t = 0; t < 40; ++t) {
        const LaurentPoly q = random_poly(3, rng);
        CHECK(poly_from_json(3, to_json(q)) == q);
    }
}

TEST_CASE("permutation parsing") {
    CHECK(parse_permutation("2,3,1", 3) == Permutation({2, 3, 1}));
    CHECK(parse_permutation("s1 s2", 3) ==
          Permutation::simple(3, 1) * Permutation::simple(3, 2));
    CHECK(parse_permutation("1", 3) == Permutation(3));
    CHECK_THROWS_AS(parse_permutation("2,2,1", 3), std::invalid_argument);
}
