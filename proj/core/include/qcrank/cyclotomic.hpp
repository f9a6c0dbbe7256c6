#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcrank/numeric.hpp"

namespace qcrank {

/// Laurent polynomial in the formal root of unity: a finite map from
/// integer exponents (possibly negative) to exact integer coefficients.
/// Canonical form stores no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<long, BigInt> coeffs);

    static LaurentPoly monomial(long exponent, BigInt coefficient = 1);

    /// 1 + zeta + ... + zeta^{ell-1} for prime ell.
    static LaurentPoly cyclotomic(long ell);

    const std::map<long, BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    void add_term(long exponent, const BigInt& coefficient);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    std::map<long, BigInt> coeffs_;
};

/// Element of Z[zeta]/Phi_ell(zeta) for prime ell, stored as the reduced
/// coefficient vector c0 + c1*zeta + ... + c_{ell-2}*zeta^{ell-2}.
/// In this basis, divisibility of a Laurent polynomial by Phi_ell is a
/// literal zero test on its image.
class CycElem {
public:
    /// Zero element of the given quotient ring; rejects non-prime order.
    explicit CycElem(long order);
    CycElem(long order, std::vector<BigInt> coeffs);

    static CycElem integer(long order, BigInt value);
    static CycElem zeta_power(long order, long exponent);

    long order() const noexcept { return order_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    CycElem& operator+=(const CycElem& other);
    CycElem& operator-=(const CycElem& other);
    CycElem operator-() const;
    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend bool operator==(const CycElem& a, const CycElem& b) = default;

    /// Comma-separated decimal coefficients, lowest degree first.
    std::string to_string() const;

private:
    void check_same_ring(const CycElem& other) const;

    long order_ = 2;
    std::vector<BigInt> coeffs_;  // length order-1
};

/// Image of a Laurent polynomial in Z[zeta]/Phi_ell: exponents are folded
/// with zeta^ell = 1, then the top basis vector is eliminated through
/// zeta^{ell-1} = -(1 + zeta + ... + zeta^{ell-2}). The result is zero
/// exactly when Phi_ell divides the input in Z[zeta, zeta^{-1}].
CycElem cyc_project(const LaurentPoly& p, long ell);

CycElem cyc_mul(const CycElem& a, const CycElem& b);

bool cyc_is_zero(const CycElem& a);

/// Multiplicative inverse within Z[zeta]/Phi_ell, if the element is a unit
/// of that ring. Solved exactly over the rationals and accepted only when
/// the solution is integral.
std::optional<CycElem> cyc_inverse(const CycElem& a);

}  // namespace qcrank
