#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcrank {

/// Arbitrary-precision integer. Series coefficients grow without an a
/// priori bound, so every coefficient path uses this type.
using BigInt = mpz_class;

/// Exact rational with canonical form (reduced, denominator > 0).
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

/// "num/den" with the denominator always explicit, e.g. "-1/12", "0/1".
std::string to_fraction(const Rational& v);

/// Floor of an exact rational.
BigInt rational_floor(const Rational& v);

bool is_prime(long n);
bool is_squarefree(long n);

/// Divisors of n in ascending order.
std::vector<long> divisors(long n);

long euler_phi(long n);

/// d = gcd(a,c) together with x,y such that a*x + c*y = d.
struct ExtGcd {
    long g, x, y;
};
ExtGcd ext_gcd(long a, long b);

}  // namespace qcrank
