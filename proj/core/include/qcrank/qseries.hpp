#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcrank/cyclotomic.hpp"
#include "qcrank/numeric.hpp"

namespace qcrank {

/// Coefficient-ring operations used by QSeries. The "tag" argument carries
/// value-level ring structure (the cyclotomic order); for plain integers it
/// is ignored.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<BigInt> {
    static BigInt zero_like(const BigInt&) { return BigInt(0); }
    static BigInt one_like(const BigInt&) { return BigInt(1); }
    static bool is_zero(const BigInt& v) { return v == 0; }
    static bool is_one(const BigInt& v) { return v == 1; }
    static bool same_ring(const BigInt&, const BigInt&) { return true; }
    static std::optional<BigInt> inverse(const BigInt& v) {
        if (v == 1 || v == -1) return v;
        return std::nullopt;
    }
};

template <>
struct ring_traits<CycElem> {
    static CycElem zero_like(const CycElem& tag) { return CycElem(tag.order()); }
    static CycElem one_like(const CycElem& tag) { return CycElem::integer(tag.order(), 1); }
    static bool is_zero(const CycElem& v) { return v.is_zero(); }
    static bool is_one(const CycElem& v) { return v == one_like(v); }
    static bool same_ring(const CycElem& a, const CycElem& b) { return a.order() == b.order(); }
    static std::optional<CycElem> inverse(const CycElem& v) { return cyc_inverse(v); }
};

/// Truncated formal power series in q. Coefficients are stored for
/// q^0 ... q^{T-1}; values are immutable after construction and all
/// arithmetic truncates at the minimum operand precision.
template <typename R>
class QSeries {
public:
    explicit QSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("QSeries: precision must be at least 1");
        for (const auto& c : coeffs_)
            if (!ring_traits<R>::same_ring(c, coeffs_.front()))
                throw std::invalid_argument("QSeries: mixed coefficient rings");
    }

    static QSeries zero(const R& tag, std::size_t precision) {
        require_precision(precision);
        return QSeries(std::vector<R>(precision, ring_traits<R>::zero_like(tag)));
    }

    static QSeries one(const R& tag, std::size_t precision) {
        require_precision(precision);
        std::vector<R> c(precision, ring_traits<R>::zero_like(tag));
        c[0] = ring_traits<R>::one_like(tag);
        return QSeries(std::move(c));
    }

    std::size_t precision() const noexcept { return coeffs_.size(); }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }

    const R& operator[](std::size_t n) const {
        if (n >= coeffs_.size()) throw std::out_of_range("QSeries: index beyond precision");
        return coeffs_[n];
    }

    /// Zero element of the coefficient ring this series lives over.
    R ring_tag() const { return ring_traits<R>::zero_like(coeffs_.front()); }

    QSeries truncated(std::size_t precision) const {
        require_precision(precision);
        if (precision >= coeffs_.size()) return *this;
        return QSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + precision));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) = default;

private:
    static void require_precision(std::size_t precision) {
        if (precision == 0) throw std::invalid_argument("QSeries: precision must be at least 1");
    }

    std::vector<R> coeffs_;
};

namespace detail {

/// In-place multiplication by the sparse binomial (1 - u q^d): one pass,
/// O(T) ring operations.
template <typename R>
void mul_binomial(std::vector<R>& f, const R& u, std::size_t d) {
    if (d == 0) throw std::invalid_argument("mul_binomial: stride must be positive");
    if (ring_traits<R>::is_zero(u)) return;
    const bool unit = ring_traits<R>::is_one(u);
    for (std::size_t m = f.size(); m-- > d;) {
        if (ring_traits<R>::is_zero(f[m - d])) continue;
        if (unit)
            f[m] -= f[m - d];
        else
            f[m] -= u * f[m - d];
    }
}

template <typename R>
void check_same_ring(const QSeries<R>& a, const QSeries<R>& b) {
    if (!ring_traits<R>::same_ring(a.coefficients().front(), b.coefficients().front()))
        throw std::invalid_argument("QSeries: operands live over different rings");
}

}  // namespace detail

template <typename R>
QSeries<R> series_add(const QSeries<R>& a, const QSeries<R>& b) {
    detail::check_same_ring(a, b);
    const std::size_t T = std::min(a.precision(), b.precision());
    std::vector<R> out(a.coefficients().begin(), a.coefficients().begin() + T);
    for (std::size_t i = 0; i < T; ++i) out[i] += b[i];
    return QSeries<R>(std::move(out));
}

template <typename R>
QSeries<R> series_sub(const QSeries<R>& a, const QSeries<R>& b) {
    detail::check_same_ring(a, b);
    const std::size_t T = std::min(a.precision(), b.precision());
    std::vector<R> out(a.coefficients().begin(), a.coefficients().begin() + T);
    for (std::size_t i = 0; i < T; ++i) out[i] -= b[i];
    return QSeries<R>(std::move(out));
}

/// Truncated Cauchy product.
template <typename R>
QSeries<R> series_mul(const QSeries<R>& a, const QSeries<R>& b) {
    detail::check_same_ring(a, b);
    const std::size_t T = std::min(a.precision(), b.precision());
    std::vector<R> out(T, a.ring_tag());
    for (std::size_t i = 0; i < T; ++i) {
        if (ring_traits<R>::is_zero(a[i])) continue;
        for (std::size_t j = 0; j + i < T; ++j) {
            if (ring_traits<R>::is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return QSeries<R>(std::move(out));
}

/// Multiplicative inverse up to the series precision. The constant term
/// must be a unit of the coefficient ring.
template <typename R>
QSeries<R> series_inv(const QSeries<R>& f) {
    auto head = ring_traits<R>::inverse(f[0]);
    if (!head)
        throw std::domain_error("series_inv: constant term is not a unit of the coefficient ring");
    const std::size_t T = f.precision();
    std::vector<R> g(T, f.ring_tag());
    g[0] = *head;
    for (std::size_t n = 1; n < T; ++n) {
        R acc = f.ring_tag();
        for (std::size_t k = 1; k <= n; ++k) {
            if (ring_traits<R>::is_zero(f[k]) || ring_traits<R>::is_zero(g[n - k])) continue;
            acc += f[k] * g[n - k];
        }
        g[n] = -(*head * acc);
    }
    return QSeries<R>(std::move(g));
}

template <typename R>
QSeries<R> operator+(const QSeries<R>& a, const QSeries<R>& b) { return series_add(a, b); }
template <typename R>
QSeries<R> operator-(const QSeries<R>& a, const QSeries<R>& b) { return series_sub(a, b); }
template <typename R>
QSeries<R> operator*(const QSeries<R>& a, const QSeries<R>& b) { return series_mul(a, b); }

/// Subsequence g[n] = f[alpha*n + beta]; precision ceil((T - beta)/alpha).
template <typename R>
QSeries<R> slice_progression(const QSeries<R>& f, long alpha, long beta) {
    if (alpha < 1) throw std::invalid_argument("slice_progression: alpha must be positive");
    if (beta < 0 || beta >= alpha)
        throw std::invalid_argument("slice_progression: beta must lie in [0, alpha)");
    const long T = static_cast<long>(f.precision());
    if (beta >= T)
        throw std::invalid_argument("slice_progression: series precision does not reach beta");
    std::vector<R> out;
    for (long n = beta; n < T; n += alpha) out.push_back(f[static_cast<std::size_t>(n)]);
    return QSeries<R>(std::move(out));
}

/// Divisor-indexed exponent vector defining prod_{delta|M} prod_{n>=1}
/// (1 - q^{delta n})^{r_delta}.
class EtaQuotientSpec {
public:
    EtaQuotientSpec(long level, std::vector<long> exponents_by_divisor);

    long level() const noexcept { return level_; }
    const std::vector<long>& divisor_list() const noexcept { return divisors_; }
    const std::vector<long>& exponents() const noexcept { return exponents_; }

    long exponent_for(long divisor) const;

    /// sum_{delta|M} r_delta
    long exponent_sum() const;
    /// sum_{delta|M} delta * r_delta
    long weighted_exponent_sum() const;

    friend bool operator==(const EtaQuotientSpec& a, const EtaQuotientSpec& b) = default;

private:
    long level_;
    std::vector<long> divisors_;
    std::vector<long> exponents_;
};

/// Truncated expansion of the eta quotient over exact integers. Negative
/// exponents go through series_inv of the matching positive power.
QSeries<BigInt> eta_product(const EtaQuotientSpec& spec, std::size_t precision);

/// prod_{n>=1} (1 - zeta^k q^{delta n})(1 - zeta^{-k} q^{delta n}) over
/// Z[zeta]/Phi_ell.
QSeries<CycElem> twisted_pair_product(long k, long delta, long ell, std::size_t precision);

/// Integer series mapped coefficientwise into Z[zeta]/Phi_ell.
QSeries<CycElem> promote_to_cyclotomic(const QSeries<BigInt>& f, long ell);

}  // namespace qcrank
