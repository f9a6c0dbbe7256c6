#include <doctest.h>

#include <random>

#include "qcrank/cyclotomic.hpp"

using namespace qcrank;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<long> exp_dist(-6, 6);
    std::uniform_int_distribution<long> coeff_dist(-9, 9);
    std::uniform_int_distribution<int> terms_dist(0, 6);
    LaurentPoly p;
    const int terms = terms_dist(rng);
    for (int i = 0; i < terms; ++i) p.add_term(exp_dist(rng), BigInt(coeff_dist(rng)));
    return p;
}

CycElem random_cyc(std::mt19937& rng, long ell) {
    std::uniform_int_distribution<long> coeff_dist(-9, 9);
    std::vector<BigInt> c(static_cast<std::size_t>(ell - 1));
    for (auto& v : c) v = coeff_dist(rng);
    return CycElem(ell, std::move(c));
}

}  // namespace

TEST_CASE("projection reduces negative exponents and the top basis vector") {
    // zeta^{-1} - 1 + zeta at ell=3: zeta^{-1} = zeta^2 = -1-zeta
    LaurentPoly p;
    p.add_term(-1, 1);
    p.add_term(0, -1);
    p.add_term(1, 1);
    const CycElem img = cyc_project(p, 3);
    CHECK(img == CycElem(3, {-2, 0}));
}

TEST_CASE("the cyclotomic polynomial itself projects to zero") {
    CHECK(cyc_project(LaurentPoly::cyclotomic(5), 5).is_zero());
    CHECK(cyc_project(LaurentPoly::cyclotomic(3), 3).is_zero());
}

TEST_CASE("zeta^ell is 1 in the quotient") {
    for (long ell : {2, 3, 5, 7, 11, 13}) {
        const CycElem img = cyc_project(LaurentPoly::monomial(ell), ell);
        CHECK(img == CycElem::integer(ell, 1));
        CHECK(CycElem::zeta_power(ell, ell) == CycElem::integer(ell, 1));
    }
}

TEST_CASE("non-prime orders are rejected") {
    CHECK_THROWS_AS(cyc_project(LaurentPoly::monomial(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(CycElem(6), std::invalid_argument);
    CHECK_THROWS_AS(CycElem(1), std::invalid_argument);
    CHECK_THROWS_AS(CycElem::zeta_power(9, 2), std::invalid_argument);
}

TEST_CASE("(1+zeta)^2 = zeta at ell=3") {
    const CycElem a(3, {1, 1});
    CHECK(a * a == CycElem::zeta_power(3, 1));
}

TEST_CASE("multiplicative identity and zeta^3 = 1") {
    std::mt19937 rng(12345);
    const CycElem one = CycElem::integer(7, 1);
    for (int i = 0; i < 20; ++i) {
        const CycElem a = random_cyc(rng, 7);
        CHECK(a * one == a);
    }
    CHECK(CycElem::zeta_power(3, 1) * CycElem::zeta_power(3, 2) == CycElem::integer(3, 1));
}

TEST_CASE("mixed orders are rejected") {
    CHECK_THROWS_AS(CycElem(3) * CycElem(5), std::invalid_argument);
    CHECK_THROWS_AS(CycElem(3) + CycElem(5), std::invalid_argument);
}

TEST_CASE("zero test") {
    CHECK(cyc_is_zero(cyc_project(LaurentPoly::cyclotomic(3), 3)));
    CHECK_FALSE(cyc_is_zero(CycElem::integer(5, 17)));
    CHECK_FALSE(cyc_is_zero(CycElem::integer(5, -1)));
    const CycElem z = CycElem::zeta_power(7, 3);
    CHECK(cyc_is_zero(z - z));
}

TEST_CASE("an integer constant projects to zero only when it is zero") {
    for (long ell : {2, 3, 5, 7, 11}) {
        CHECK(cyc_project(LaurentPoly(), ell).is_zero());
        for (long c : {1, -1, 2, 7, -100})
            CHECK_FALSE(cyc_project(LaurentPoly::monomial(0, c), ell).is_zero());
    }
}

TEST_CASE("projection is a ring homomorphism") {
    std::mt19937 rng(99);
    for (long ell : {2, 3, 5, 7, 11}) {
        for (int i = 0; i < 60; ++i) {
            const LaurentPoly p = random_laurent(rng);
            const LaurentPoly q = random_laurent(rng);
            CHECK(cyc_project(p * q, ell) == cyc_mul(cyc_project(p, ell), cyc_project(q, ell)));
            CHECK(cyc_project(p + q, ell) == cyc_project(p, ell) + cyc_project(q, ell));
        }
    }
}

TEST_CASE("multiples of Phi_ell all project to zero") {
    std::mt19937 rng(7);
    for (long ell : {2, 3, 5, 7, 11}) {
        const LaurentPoly phi = LaurentPoly::cyclotomic(ell);
        for (int i = 0; i < 40; ++i)
            CHECK(cyc_is_zero(cyc_project(phi * random_laurent(rng), ell)));
    }
}

TEST_CASE("ring laws hold on random elements") {
    std::mt19937 rng(2024);
    for (long ell : {3, 5, 11}) {
        for (int i = 0; i < 40; ++i) {
            const CycElem a = random_cyc(rng, ell);
            const CycElem b = random_cyc(rng, ell);
            const CycElem c = random_cyc(rng, ell);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (b + c) == (a + b) + c);
            CHECK(a - a == CycElem(ell));
        }
    }
}

TEST_CASE("rational arithmetic satisfies field laws") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    auto rand_q = [&] {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };
    for (int i = 0; i < 200; ++i) {
        const Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        if (a != 0) CHECK(a * (1 / a) == 1);
        CHECK(a - a == 0);
    }
}

TEST_CASE("to_fraction always carries an explicit denominator") {
    CHECK(to_fraction(Rational(83, 15)) == "83/15");
    CHECK(to_fraction(Rational(-1, 12)) == "-1/12");
    CHECK(to_fraction(Rational(0)) == "0/1");
    CHECK(to_fraction(Rational(2)) == "2/1");
    Rational r(6, -4);  // canonicalization sorts out sign and gcd
    r.canonicalize();
    CHECK(to_fraction(r) == "-3/2");
}

TEST_CASE("rational_floor matches integer division semantics") {
    CHECK(rational_floor(Rational(83, 15)) == 5);
    CHECK(rational_floor(Rational(-1, 12)) == -1);
    CHECK(rational_floor(Rational(7)) == 7);
    CHECK(rational_floor(Rational(2131, 180)) == 11);
}

TEST_CASE("inverses of units, and rejection of non-units") {
    // zeta^k inverts to zeta^{-k}
    for (long ell : {3, 5, 7}) {
        for (long k = 0; k < ell; ++k) {
            const auto inv = cyc_inverse(CycElem::zeta_power(ell, k));
            REQUIRE(inv.has_value());
            CHECK(*inv == CycElem::zeta_power(ell, -k));
        }
    }
    // 1 + zeta = -zeta^2 at ell=3; its inverse is -zeta
    const auto inv = cyc_inverse(CycElem(3, {1, 1}));
    REQUIRE(inv.has_value());
    CHECK(*inv == CycElem(3, {0, -1}));
    CHECK(CycElem(3, {1, 1}) * *inv == CycElem::integer(3, 1));

    CHECK_FALSE(cyc_inverse(CycElem::integer(3, 2)).has_value());
    CHECK_FALSE(cyc_inverse(CycElem(3)).has_value());
    // zeta - 1 has norm +-ell: invertible over Q but not over Z
    CHECK_FALSE(cyc_inverse(CycElem(5, {-1, 1, 0, 0})).has_value());
}

TEST_CASE("Laurent polynomials stay in canonical form") {
    LaurentPoly p;
    p.add_term(3, 5);
    p.add_term(3, -5);
    CHECK(p.is_zero());
    CHECK(p.coefficients().empty());

    LaurentPoly q(std::map<long, BigInt>{{-2, BigInt(0)}, {1, BigInt(4)}});
    CHECK(q.coefficients().size() == 1);
}
