#include "qcrank/cyclotomic.hpp"

#include <stdexcept>
#include <utility>

namespace qcrank {

LaurentPoly::LaurentPoly(std::map<long, BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::monomial(long exponent, BigInt coefficient) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::cyclotomic(long ell) {
    if (!is_prime(ell)) throw std::invalid_argument("LaurentPoly::cyclotomic: order must be prime");
    LaurentPoly p;
    for (long k = 0; k < ell; ++k) p.add_term(k, 1);
    return p;
}

void LaurentPoly::add_term(long exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

namespace {

long positive_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

// Fold a bucket vector indexed by exponent mod ell down to the reduced
// basis via zeta^{ell-1} = -(1 + ... + zeta^{ell-2}).
std::vector<BigInt> reduce_folded(long ell, std::vector<BigInt> folded) {
    std::vector<BigInt> out(static_cast<std::size_t>(ell - 1));
    const BigInt& top = folded.back();
    for (long i = 0; i < ell - 1; ++i) out[i] = folded[i] - top;
    return out;
}

}  // namespace

CycElem::CycElem(long order) : order_(order) {
    if (!is_prime(order)) throw std::invalid_argument("CycElem: order must be prime");
    coeffs_.assign(static_cast<std::size_t>(order - 1), BigInt(0));
}

CycElem::CycElem(long order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (!is_prime(order)) throw std::invalid_argument("CycElem: order must be prime");
    if (coeffs_.size() != static_cast<std::size_t>(order - 1))
        throw std::invalid_argument("CycElem: coefficient vector must have length order-1");
}

CycElem CycElem::integer(long order, BigInt value) {
    CycElem e(order);
    e.coeffs_[0] = std::move(value);
    return e;
}

CycElem CycElem::zeta_power(long order, long exponent) {
    CycElem e(order);
    long k = positive_mod(exponent, order);
    if (k < order - 1) {
        e.coeffs_[k] = 1;
    } else {
        for (auto& c : e.coeffs_) c = -1;
    }
    return e;
}

bool CycElem::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

void CycElem::check_same_ring(const CycElem& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("CycElem: mixed cyclotomic orders");
}

CycElem& CycElem::operator+=(const CycElem& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& other) {
    check_same_ring(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CycElem CycElem::operator-() const {
    CycElem out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    a.check_same_ring(b);
    const long ell = a.order_;
    // Raw convolution has degree <= 2*ell-4 < 2*ell, so folding exponents
    // once by ell lands everything in [0, ell-1].
    std::vector<BigInt> folded(static_cast<std::size_t>(ell), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            folded[(i + j) % static_cast<std::size_t>(ell)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycElem(ell, reduce_folded(ell, std::move(folded)));
}

std::string CycElem::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

CycElem cyc_project(const LaurentPoly& p, long ell) {
    if (!is_prime(ell)) throw std::invalid_argument("cyc_project: order must be prime");
    std::vector<BigInt> folded(static_cast<std::size_t>(ell), BigInt(0));
    for (const auto& [e, c] : p.coefficients()) folded[positive_mod(e, ell)] += c;
    return CycElem(ell, reduce_folded(ell, std::move(folded)));
}

CycElem cyc_mul(const CycElem& a, const CycElem& b) { return a * b; }

bool cyc_is_zero(const CycElem& a) { return a.is_zero(); }

std::optional<CycElem> cyc_inverse(const CycElem& a) {
    const long ell = a.order();
    const std::size_t n = static_cast<std::size_t>(ell - 1);
    if (a.is_zero()) return std::nullopt;

    // Solve M*x = e0 over Q, where column j of M is a*zeta^j reduced.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        CycElem col = a * CycElem::zeta_power(ell, static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = Rational(col.coefficients()[i]);
    }
    m[0][n] = 1;

    for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;  // singular: not a unit
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
    }

    std::vector<BigInt> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = m[i][n] / m[i][i];
        v.canonicalize();
        if (v.get_den() != 1) return std::nullopt;  // unit over Q but not over Z
        inv[i] = v.get_num();
    }
    return CycElem(ell, std::move(inv));
}

}  // namespace qcrank
