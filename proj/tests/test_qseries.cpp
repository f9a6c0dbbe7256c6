#include <doctest.h>

#include <random>

#include "qcrank/partition_oracle.hpp"
#include "qcrank/qseries.hpp"

using namespace qcrank;

namespace {

QSeries<BigInt> int_series(std::vector<long> values) {
    std::vector<BigInt> c(values.begin(), values.end());
    return QSeries<BigInt>(std::move(c));
}

QSeries<BigInt> random_int_series(std::mt19937& rng, std::size_t precision) {
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<BigInt> c(precision);
    for (auto& v : c) v = dist(rng);
    return QSeries<BigInt>(std::move(c));
}

QSeries<CycElem> random_cyc_series(std::mt19937& rng, long ell, std::size_t precision) {
    std::uniform_int_distribution<long> dist(-5, 5);
    std::vector<CycElem> c;
    c.reserve(precision);
    for (std::size_t i = 0; i < precision; ++i) {
        std::vector<BigInt> v(static_cast<std::size_t>(ell - 1));
        for (auto& x : v) x = dist(rng);
        c.emplace_back(ell, std::move(v));
    }
    return QSeries<CycElem>(std::move(c));
}

// Brute-force partition counts, independent of any series code.
std::uint64_t partitions_by_enumeration(long n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const std::vector<long>&) { ++count; });
    return count;
}

}  // namespace

TEST_CASE("binomial products multiply out") {
    const auto a = int_series({1, 1, 0, 0});   // 1 + q
    const auto b = int_series({1, -1, 0, 0});  // 1 - q
    CHECK(series_mul(a, b) == int_series({1, 0, -1, 0}));
}

TEST_CASE("one is the multiplicative identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        const auto f = random_int_series(rng, 12);
        CHECK(series_mul(f, QSeries<BigInt>::one(BigInt(0), 12)) == f);
    }
}

TEST_CASE("inverse of the Euler product counts partitions") {
    const std::size_t T = 31;
    const auto euler = eta_product(EtaQuotientSpec(1, {1}), T);
    const auto inv = series_inv(euler);
    for (long n = 0; n < static_cast<long>(T); ++n)
        CHECK(inv[static_cast<std::size_t>(n)] == partitions_by_enumeration(n));
    CHECK(series_mul(euler, inv) == QSeries<BigInt>::one(BigInt(0), T));
}

TEST_CASE("geometric series inverse") {
    const auto f = int_series({1, -1, 0, 0, 0});
    const auto g = series_inv(f);
    CHECK(g == int_series({1, 1, 1, 1, 1}));
}

TEST_CASE("inversion is an involution on unit-headed series") {
    std::mt19937 rng(23);
    for (int i = 0; i < 15; ++i) {
        auto f = random_int_series(rng, 14);
        std::vector<BigInt> c = f.coefficients();
        c[0] = i % 2 ? 1 : -1;
        const QSeries<BigInt> unit_headed(std::move(c));
        CHECK(series_inv(series_inv(unit_headed)) == unit_headed);
    }
}

TEST_CASE("non-unit constant terms are rejected") {
    CHECK_THROWS_AS(series_inv(int_series({2, 1, 0})), std::domain_error);
    CHECK_THROWS_AS(series_inv(int_series({0, 1, 0})), std::domain_error);
    CHECK_THROWS_AS(series_inv(QSeries<CycElem>::zero(CycElem(3), 4)), std::domain_error);
}

TEST_CASE("eta product: partition generating function to q^10") {
    const auto f = eta_product(EtaQuotientSpec(1, {-1}), 11);
    const std::vector<long> expected = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(f[i] == expected[i]);
}

TEST_CASE("eta product with zero exponents is the constant 1") {
    CHECK(eta_product(EtaQuotientSpec(6, {0, 0, 0, 0}), 9) ==
          QSeries<BigInt>::one(BigInt(0), 9));
}

TEST_CASE("Euler product is supported on generalized pentagonal numbers") {
    const auto f = eta_product(EtaQuotientSpec(1, {1}), 15);
    const std::vector<long> expected = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(f[i] == expected[i]);
}

TEST_CASE("eta products with non-negative exponents match the literal polynomial product") {
    // expand prod (1-q^{delta n})^{r_delta} by schoolbook polynomial multiplication
    auto literal = [](const EtaQuotientSpec& spec, std::size_t T) {
        std::vector<BigInt> acc(T, BigInt(0));
        acc[0] = 1;
        for (std::size_t i = 0; i < spec.divisor_list().size(); ++i) {
            const long d = spec.divisor_list()[i];
            for (long rep = 0; rep < spec.exponents()[i]; ++rep) {
                for (long n = d; n < static_cast<long>(T); n += d) {
                    // acc *= (1 - q^n)
                    std::vector<BigInt> next(T, BigInt(0));
                    for (std::size_t m = 0; m < T; ++m) {
                        if (acc[m] == 0) continue;
                        next[m] += acc[m];
                        if (m + static_cast<std::size_t>(n) < T)
                            next[m + static_cast<std::size_t>(n)] -= acc[m];
                    }
                    acc = std::move(next);
                }
            }
        }
        return QSeries<BigInt>(std::move(acc));
    };
    const EtaQuotientSpec s1(6, {1, 2, 0, 1});
    CHECK(eta_product(s1, 40) == literal(s1, 40));
    const EtaQuotientSpec s2(4, {3, 0, 2});
    CHECK(eta_product(s2, 35) == literal(s2, 35));
}

TEST_CASE("twisted pair with k divisible by ell collapses to a plain square") {
    const auto twisted = twisted_pair_product(5, 2, 5, 30);
    const auto plain = eta_product(EtaQuotientSpec(2, {0, 2}), 30);
    CHECK(twisted == promote_to_cyclotomic(plain, 5));
}

TEST_CASE("ell=3 twisted pair equals (1-q^{3n})/(1-q^n)") {
    const auto twisted = twisted_pair_product(1, 1, 3, 50);
    const auto quotient = eta_product(EtaQuotientSpec(3, {-1, 1}), 50);
    CHECK(twisted == promote_to_cyclotomic(quotient, 3));
}

TEST_CASE("ell=5 twisted pair: head and first twist coefficient") {
    const auto f = twisted_pair_product(2, 5, 5, 11);
    CHECK(f[0] == CycElem::integer(5, 1));
    CHECK(f[5] == CycElem(5, {0, 0, -1, -1}));  // -(zeta^2 + zeta^3)
    for (std::size_t i : {1u, 2u, 3u, 4u}) CHECK(f[i].is_zero());
}

TEST_CASE("slice of an arithmetic progression") {
    std::vector<BigInt> c;
    for (long n = 0; n < 12; ++n) c.emplace_back(n);
    const QSeries<BigInt> f(std::move(c));
    const auto odd = slice_progression(f, 2, 1);
    CHECK(odd.precision() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(odd[i] == 2 * static_cast<long>(i) + 1);
    CHECK(slice_progression(f, 1, 0) == f);
}

TEST_CASE("Ramanujan slice: p(5n+4) is divisible by 5") {
    const auto f = eta_product(EtaQuotientSpec(1, {-1}), 30);
    const auto sliced = slice_progression(f, 5, 4);
    const std::vector<long> expected = {5, 30, 135, 490, 1575, 4565};
    REQUIRE(sliced.precision() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(sliced[i] == expected[i]);
        CHECK(sliced[i] % 5 == 0);
        CHECK(sliced[i] == partitions_by_enumeration(5 * static_cast<long>(i) + 4));
    }
}

TEST_CASE("ring mismatch is rejected") {
    const auto a = QSeries<CycElem>::one(CycElem(3), 5);
    const auto b = QSeries<CycElem>::one(CycElem(5), 5);
    CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(series_add(a, b), std::invalid_argument);
}

TEST_CASE("series ring laws and truncation consistency") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 15; ++i) {
        const auto a = random_int_series(rng, 16);
        const auto b = random_int_series(rng, 16);
        const auto c = random_int_series(rng, 16);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
        // truncate-then-multiply equals multiply-then-truncate
        CHECK(series_mul(a.truncated(9), b.truncated(9)) == series_mul(a, b).truncated(9));
    }
    for (int i = 0; i < 8; ++i) {
        const auto a = random_cyc_series(rng, 3, 12);
        const auto b = random_cyc_series(rng, 3, 12);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(a.truncated(7), b.truncated(7)) == series_mul(a, b).truncated(7));
    }
}

TEST_CASE("precision of a product is the minimum operand precision") {
    std::mt19937 rng(8);
    const auto a = random_int_series(rng, 20);
    const auto b = random_int_series(rng, 13);
    CHECK(series_mul(a, b).precision() == 13);
    CHECK(series_add(a, b).precision() == 13);
}

TEST_CASE("multiplying by a series supported on multiples of alpha preserves vanishing slices") {
    std::mt19937 rng(424242);
    const long alpha = 4;
    for (int trial = 0; trial < 20; ++trial) {
        const long beta = std::uniform_int_distribution<long>(0, alpha - 1)(rng);
        // random f with the (alpha, beta) progression zeroed out
        auto f = random_int_series(rng, 32);
        std::vector<BigInt> fc = f.coefficients();
        for (std::size_t m = static_cast<std::size_t>(beta); m < fc.size();
             m += static_cast<std::size_t>(alpha))
            fc[m] = 0;
        const QSeries<BigInt> fz(std::move(fc));
        // random g supported only on exponents divisible by alpha
        std::vector<BigInt> gc(32, BigInt(0));
        std::uniform_int_distribution<long> dist(-9, 9);
        for (std::size_t m = 0; m < gc.size(); m += static_cast<std::size_t>(alpha))
            gc[m] = dist(rng);
        const QSeries<BigInt> g(std::move(gc));

        const auto sliced = slice_progression(series_mul(fz, g), alpha, beta);
        for (std::size_t i = 0; i < sliced.precision(); ++i) CHECK(sliced[i] == 0);
    }
}

TEST_CASE("slice precision follows ceil((T - beta)/alpha)") {
    std::mt19937 rng(64);
    const auto f = random_int_series(rng, 23);
    CHECK(slice_progression(f, 5, 4).precision() == 4);  // 4, 9, 14, 19
    CHECK(slice_progression(f, 5, 0).precision() == 5);  // 0, 5, 10, 15, 20
    CHECK_THROWS_AS(slice_progression(f, 30, 25), std::invalid_argument);
    CHECK_THROWS_AS(slice_progression(f, 5, 5), std::invalid_argument);
}

TEST_CASE("eta spec validates its exponent vector") {
    CHECK_THROWS_AS(EtaQuotientSpec(6, {1, 2}), std::invalid_argument);
    const EtaQuotientSpec spec(6, {1, -2, 0, 4});
    CHECK(spec.divisor_list() == std::vector<long>{1, 2, 3, 6});
    CHECK(spec.exponent_for(3) == 0);
    CHECK(spec.exponent_sum() == 3);
    CHECK(spec.weighted_exponent_sum() == 1 - 4 + 0 + 24);
    CHECK_THROWS_AS(spec.exponent_for(4), std::invalid_argument);
}
