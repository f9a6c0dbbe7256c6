#include "qcrank/crank_gf.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>

#include "qcrank/parallel.hpp"

namespace qcrank {

namespace {

const std::vector<long> kSupportedT = {5, 7, 11, 17, 19};

void require_supported(long t) {
    if (!std::binary_search(kSupportedT.begin(), kSupportedT.end(), t))
        throw std::invalid_argument("no crank product is known for t = " + std::to_string(t));
}

}  // namespace

const std::vector<long>& supported_t() { return kSupportedT; }

CrankProductSpec CrankProductSpec::for_t(long t) {
    require_supported(t);
    switch (t) {
        case 5: return {5, 1, {2, 4}};
        case 7: return {7, 3, {2, 4}};
        case 11: return {11, 3, {2, 4, 8, 10}};
        case 17: return {17, 5, {2, 4, 8, 10, 14, 16}};
        default: return {19, 7, {2, 4, 8, 10, 14, 16}};
    }
}

const std::vector<long>& theorem_classes(long t) {
    require_supported(t);
    static const std::vector<long> k5 = {6, 10, 12, 13};
    static const std::vector<long> k7 = {8, 11, 17};
    static const std::vector<long> k11 = {11, 20, 26, 29, 32};
    static const std::vector<long> k17 = {14, 20, 23, 26, 35, 38, 41, 47};
    static const std::vector<long> k19 = {14, 17, 26, 35, 38, 41, 44, 50, 56};
    switch (t) {
        case 5: return k5;
        case 7: return k7;
        case 11: return k11;
        case 17: return k17;
        default: return k19;
    }
}

QSeries<CycElem> build_crank_gf(long ell, std::size_t precision) {
    if (!is_prime(ell)) throw std::invalid_argument("build_crank_gf: ell must be prime");
    const QSeries<BigInt> numerator = eta_product(EtaQuotientSpec(1, {1}), precision);
    const QSeries<CycElem> denominator = twisted_pair_product(1, 1, ell, precision);
    return series_mul(promote_to_cyclotomic(numerator, ell), series_inv(denominator));
}

QSeries<BigInt> build_tcore_gf(long t, std::size_t precision) {
    if (t < 2) throw std::invalid_argument("build_tcore_gf: t must be at least 2");
    std::vector<long> exponents(divisors(t).size(), 0);
    exponents.front() = -1;
    exponents.back() = t;
    return eta_product(EtaQuotientSpec(t, std::move(exponents)), precision);
}

QSeries<CycElem> build_tcore_crank_gf(long t, std::size_t precision) {
    const CrankProductSpec spec = CrankProductSpec::for_t(t);
    const long ell = 3;

    // integer part of the numerator: (1-q^n) * (1-q^{tn})^tcore_power
    std::vector<long> exponents(divisors(t).size(), 0);
    exponents.front() = 1;
    exponents.back() += spec.tcore_power;  // t prime: divisors are {1, t}
    const QSeries<BigInt> plain = eta_product(EtaQuotientSpec(t, std::move(exponents)), precision);

    // twist pairs accumulate as sparse binomials: O(T) ring ops per factor
    std::vector<CycElem> f(plain.coefficients().size(), CycElem(ell));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = CycElem::integer(ell, plain[i]);
    for (long k : spec.twists) {
        const CycElem zk = CycElem::zeta_power(ell, k);
        const CycElem zmk = CycElem::zeta_power(ell, -k);
        for (std::size_t n = static_cast<std::size_t>(t); n < precision;
             n += static_cast<std::size_t>(t)) {
            detail::mul_binomial(f, zk, n);
            detail::mul_binomial(f, zmk, n);
        }
    }

    const QSeries<CycElem> denominator = twisted_pair_product(1, 1, ell, precision);
    return series_mul(QSeries<CycElem>(std::move(f)), series_inv(denominator));
}

QSeries<BigInt> build_tcore_crank_gf_at_one(long t, std::size_t precision) {
    const CrankProductSpec spec = CrankProductSpec::for_t(t);
    // same structural walk as the cyclotomic build, zeta replaced by 1
    std::vector<BigInt> f(precision, BigInt(0));
    f[0] = 1;
    const BigInt one(1);
    for (std::size_t n = 1; n < precision; ++n) detail::mul_binomial(f, one, n);
    for (long rep = 0; rep < spec.tcore_power; ++rep)
        for (std::size_t n = static_cast<std::size_t>(t); n < precision;
             n += static_cast<std::size_t>(t))
            detail::mul_binomial(f, one, n);
    for ([[maybe_unused]] long k : spec.twists)
        for (std::size_t n = static_cast<std::size_t>(t); n < precision;
             n += static_cast<std::size_t>(t)) {
            detail::mul_binomial(f, one, n);
            detail::mul_binomial(f, one, n);
        }
    std::vector<BigInt> den(precision, BigInt(0));
    den[0] = 1;
    for (std::size_t n = 1; n < precision; ++n) {
        detail::mul_binomial(den, one, n);
        detail::mul_binomial(den, one, n);
    }
    return series_mul(QSeries<BigInt>(std::move(f)), series_inv(QSeries<BigInt>(std::move(den))));
}

namespace {

/// Reduced eta-quotient exponents over level 3t plus the count j of
/// (1 - q^{3tn}) factors. Each twist pair with k not divisible by 3
/// contributes (1 - q^{3tn})/(1 - q^{tn}); a pair with 3 | k contributes
/// (1 - q^{tn})^2. The denominator pair likewise turns into
/// (1 - q^{3n})/(1 - q^n), inverted.
struct ReducedShape {
    std::vector<long> exponents;  // over divisors {1, 3, t, 3t}
    long j;
};

ReducedShape reduced_shape(long t) {
    const CrankProductSpec spec = CrankProductSpec::for_t(t);
    long r1 = 1, r3 = 0, rt = spec.tcore_power, j = 0;
    for (long k : spec.twists) {
        if (k % 3 == 0)
            rt += 2;
        else {
            rt -= 1;
            ++j;
        }
    }
    // dividing by (1 - zeta^{+-1} q^n) = (1 - q^{3n})/(1 - q^n)
    r1 += 1;
    r3 -= 1;
    return {{r1, r3, rt, 0}, j};
}

}  // namespace

std::optional<std::size_t> reduction_mismatch(long t, const EtaQuotientSpec& spec, long j,
                                              std::size_t precision) {
    std::vector<long> combined = spec.exponents();
    combined.back() += j;  // fold the (1-q^{3tn})^j factor into the eta quotient
    const QSeries<BigInt> rhs = eta_product(EtaQuotientSpec(3 * t, std::move(combined)), precision);
    const QSeries<CycElem> lhs = build_tcore_crank_gf(t, precision);
    for (std::size_t i = 0; i < precision; ++i)
        if (lhs[i] != CycElem::integer(3, rhs[i])) return i;
    return std::nullopt;
}

ReductionResult reduce_mod_phi3(long t, std::size_t verify_precision) {
    require_supported(t);
    const ReducedShape shape = reduced_shape(t);
    EtaQuotientSpec spec(3 * t, shape.exponents);
    if (auto bad = reduction_mismatch(t, spec, shape.j, verify_precision))
        throw std::logic_error("reduce_mod_phi3: identity fails first at q^" +
                               std::to_string(*bad));
    return {std::move(spec), shape.j, verify_precision};
}

RaduTuple proof_tuple(long t, long beta) {
    require_supported(t);
    const ReducedShape shape = reduced_shape(t);
    const long N = t == 5 ? 45 : (t == 7 ? 42 : 3 * t);
    return {3 * t, EtaQuotientSpec(3 * t, shape.exponents), N, beta};
}

AVector proof_avector(long t) {
    require_supported(t);
    const long N = proof_tuple(t, 0).N;
    const long head = t == 5 || t == 7 ? 2 : (t == 11 ? 4 : 6);
    std::vector<long> values(divisors(N).size(), 0);
    values.front() = head;
    return {N, std::move(values)};
}

const std::vector<long>& proof_betas(long t) {
    require_supported(t);
    static const std::vector<long> k5 = {6, 10};
    static const std::vector<long> k7 = {8};
    static const std::vector<long> k11 = {11};
    static const std::vector<long> k14 = {14};
    switch (t) {
        case 5: return k5;
        case 7: return k7;
        case 11: return k11;
        default: return k14;
    }
}

VerificationReport verify_theorem(long t, long n_max_direct, unsigned jobs) {
    require_supported(t);
    if (n_max_direct < 0) throw std::invalid_argument("verify_theorem: n_max_direct negative");

    // certificates are independent of the direct expansion; run them aside
    std::vector<std::future<Certificate>> pending;
    for (long beta : proof_betas(t))
        pending.push_back(std::async(std::launch::async, [t, beta] {
            return certify(proof_tuple(t, beta), proof_avector(t));
        }));

    VerificationReport report;
    report.t = t;
    report.theorem_list = theorem_classes(t);
    report.direct_check_bound = n_max_direct;
    report.reduction = reduce_mod_phi3(t, 201);

    const long period = 3 * t;
    const std::size_t precision = static_cast<std::size_t>(period * (n_max_direct + 1));
    const QSeries<CycElem> product = build_tcore_crank_gf(t, precision);

    std::vector<char> vanishes(static_cast<std::size_t>(period), 0);
    parallel_for(static_cast<std::size_t>(period), jobs, [&](std::size_t beta) {
        for (long n = 0; n <= n_max_direct; ++n)
            if (!product[static_cast<std::size_t>(period * n) + beta].is_zero()) return;
        vanishes[beta] = 1;
    });
    for (long beta = 0; beta < period; ++beta)
        if (vanishes[static_cast<std::size_t>(beta)]) report.explained.push_back(beta);

    for (long beta : scan(t, 3, period, n_max_direct))
        if (!vanishes[static_cast<std::size_t>(beta)]) report.unexplained_vanishing.push_back(beta);

    for (auto& fut : pending) report.certificates.push_back(fut.get());

    report.theorem_match = report.explained == report.theorem_list;
    return report;
}

std::vector<long> scan(long t, long modulus, long alpha, long n_max) {
    if (alpha < 1) throw std::invalid_argument("scan: alpha must be positive");
    if (modulus < 2) throw std::invalid_argument("scan: modulus must be at least 2");
    if (n_max < 0) throw std::invalid_argument("scan: n_max must be non-negative");
    const std::size_t precision = static_cast<std::size_t>(alpha * (n_max + 1));
    const QSeries<BigInt> gf = build_tcore_gf(t, precision);
    std::vector<long> out;
    for (long beta = 0; beta < alpha; ++beta) {
        bool ok = true;
        for (long n = 0; n <= n_max && ok; ++n)
            ok = gf[static_cast<std::size_t>(alpha * n + beta)] % modulus == 0;
        if (ok) out.push_back(beta);
    }
    return out;
}

}  // namespace qcrank
