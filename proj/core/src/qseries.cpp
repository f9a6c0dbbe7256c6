#include "qcrank/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcrank {

EtaQuotientSpec::EtaQuotientSpec(long level, std::vector<long> exponents_by_divisor)
    : level_(level), divisors_(qcrank::divisors(level)), exponents_(std::move(exponents_by_divisor)) {
    if (exponents_.size() != divisors_.size())
        throw std::invalid_argument(
            "EtaQuotientSpec: need one exponent per divisor of the level, ascending order");
}

long EtaQuotientSpec::exponent_for(long divisor) const {
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), divisor);
    if (it == divisors_.end() || *it != divisor)
        throw std::invalid_argument("EtaQuotientSpec: not a divisor of the level");
    return exponents_[static_cast<std::size_t>(it - divisors_.begin())];
}

long EtaQuotientSpec::exponent_sum() const {
    long s = 0;
    for (long e : exponents_) s += e;
    return s;
}

long EtaQuotientSpec::weighted_exponent_sum() const {
    long s = 0;
    for (std::size_t i = 0; i < divisors_.size(); ++i) s += divisors_[i] * exponents_[i];
    return s;
}

QSeries<BigInt> eta_product(const EtaQuotientSpec& spec, std::size_t precision) {
    if (precision == 0) throw std::invalid_argument("eta_product: precision must be at least 1");
    std::vector<BigInt> pos(precision, BigInt(0));
    std::vector<BigInt> neg(precision, BigInt(0));
    pos[0] = 1;
    neg[0] = 1;
    const BigInt one(1);
    bool has_neg = false;
    for (std::size_t i = 0; i < spec.divisor_list().size(); ++i) {
        const auto d = static_cast<std::size_t>(spec.divisor_list()[i]);
        const long e = spec.exponents()[i];
        auto& target = e > 0 ? pos : neg;
        has_neg = has_neg || e < 0;
        for (long rep = 0; rep < std::abs(e); ++rep)
            for (std::size_t n = d; n < precision; n += d) detail::mul_binomial(target, one, n);
    }
    QSeries<BigInt> result(std::move(pos));
    if (has_neg) result = series_mul(result, series_inv(QSeries<BigInt>(std::move(neg))));
    return result;
}

QSeries<CycElem> twisted_pair_product(long k, long delta, long ell, std::size_t precision) {
    if (precision == 0)
        throw std::invalid_argument("twisted_pair_product: precision must be at least 1");
    if (delta < 1) throw std::invalid_argument("twisted_pair_product: stride must be positive");
    const CycElem zk = CycElem::zeta_power(ell, k);
    const CycElem zmk = CycElem::zeta_power(ell, -k);
    std::vector<CycElem> f(precision, CycElem(ell));
    f[0] = CycElem::integer(ell, 1);
    for (std::size_t n = static_cast<std::size_t>(delta); n < precision;
         n += static_cast<std::size_t>(delta)) {
        detail::mul_binomial(f, zk, n);
        detail::mul_binomial(f, zmk, n);
    }
    return QSeries<CycElem>(std::move(f));
}

QSeries<CycElem> promote_to_cyclotomic(const QSeries<BigInt>& f, long ell) {
    std::vector<CycElem> out;
    out.reserve(f.precision());
    for (const auto& c : f.coefficients()) out.push_back(CycElem::integer(ell, c));
    return QSeries<CycElem>(std::move(out));
}

}  // namespace qcrank
