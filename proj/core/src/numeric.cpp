#include "qcrank/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcrank {

std::string to_fraction(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigInt rational_floor(const Rational& v) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    if (n <= 0) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

long euler_phi(long n) {
    long result = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        long pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        result *= pk - pk / p;
    }
    if (m > 1) result *= m - 1;
    return result;
}

ExtGcd ext_gcd(long a, long b) {
    if (b == 0) {
        if (a >= 0) return {a, 1, 0};
        return {-a, -1, 0};
    }
    ExtGcd sub = ext_gcd(b, a % b);
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

}  // namespace qcrank
