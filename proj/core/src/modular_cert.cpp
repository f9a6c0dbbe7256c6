#include "qcrank/modular_cert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcrank {

namespace {

long positive_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

long gcd_ll(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

// mpq arithmetic assumes canonical operands, so every ratio goes through here.
Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

AVector::AVector(long N, std::vector<long> values_by_divisor)
    : n_(N), divisors_(qcrank::divisors(N)), values_(std::move(values_by_divisor)) {
    if (values_.size() != divisors_.size())
        throw std::invalid_argument("AVector: need one value per divisor of N, ascending order");
}

long AVector::sum() const {
    long s = 0;
    for (long v : values_) s += v;
    return s;
}

long AVector::weighted_sum() const {
    long s = 0;
    for (std::size_t i = 0; i < divisors_.size(); ++i) s += divisors_[i] * values_[i];
    return s;
}

long kappa(long alpha) {
    if (alpha < 1) throw std::invalid_argument("kappa: alpha must be positive");
    return std::gcd(alpha * alpha - 1, 24L);
}

std::pair<long, long> pi_decomp(const EtaQuotientSpec& r) {
    BigInt prod(1);
    for (std::size_t i = 0; i < r.divisor_list().size(); ++i) {
        BigInt base(r.divisor_list()[i]);
        unsigned long e = static_cast<unsigned long>(std::abs(r.exponents()[i]));
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
        prod *= power;
    }
    long s = 0;
    while (prod % 2 == 0) {
        prod /= 2;
        ++s;
    }
    if (!prod.fits_slong_p())
        throw std::overflow_error("pi_decomp: odd part does not fit a machine word");
    return {s, prod.get_si()};
}

std::vector<long> squares_set(long modulus) {
    if (modulus < 1) throw std::invalid_argument("squares_set: modulus must be positive");
    std::set<long> out;
    for (long x = 1; x <= modulus; ++x)
        if (std::gcd(x, modulus) == 1) out.insert(static_cast<long>((x * x) % modulus));
    return {out.begin(), out.end()};
}

long square_class_act(long s, long beta, const RaduTuple& t) {
    if ((s - 1) % 24 != 0)
        throw std::invalid_argument(
            "square_class_act: class representative must be congruent to 1 mod 24");
    const long shift = (s - 1) / 24 * t.r.weighted_exponent_sum();
    return positive_mod(beta * s + shift, t.alpha);
}

std::vector<long> orbit(const RaduTuple& t) {
    std::set<long> out;
    for (long s : squares_set(24 * t.alpha)) out.insert(square_class_act(s, t.beta, t));
    return {out.begin(), out.end()};
}

std::vector<int> delta_star_check(const RaduTuple& t) {
    std::vector<int> fails;
    const long alpha = t.alpha;
    const long N = t.N;
    const long k = kappa(alpha);
    const auto& divs = t.r.divisor_list();
    const auto& exps = t.r.exponents();

    // 1: structural positivity and ranges (r in R(M) holds by construction)
    if (!(alpha >= 1 && t.level() >= 1 && N >= 1 && t.beta >= 0 && t.beta < alpha))
        fails.push_back(1);

    // 2: every prime of alpha divides N
    for (long p = 2; p <= alpha; ++p)
        if (alpha % p == 0 && is_prime(p) && N % p != 0) {
            fails.push_back(2);
            break;
        }

    // 3: delta | alpha*N whenever r_delta != 0
    for (std::size_t i = 0; i < divs.size(); ++i)
        if (exps[i] != 0 && (alpha * N) % divs[i] != 0) {
            fails.push_back(3);
            break;
        }

    // 4: kappa*N * sum r_delta * (alpha*N/delta) == 0 mod 24
    Rational s4(0);
    for (std::size_t i = 0; i < divs.size(); ++i)
        s4 += make_rational(BigInt(exps[i]) * BigInt(alpha) * BigInt(N), BigInt(divs[i]));
    s4 *= Rational(BigInt(k) * BigInt(N));
    s4.canonicalize();
    if (s4.get_den() != 1 || s4.get_num() % 24 != 0) fails.push_back(4);

    // 5: kappa*N * sum r_delta == 0 mod 8
    if ((BigInt(k) * BigInt(N) * BigInt(t.r.exponent_sum())) % 8 != 0) fails.push_back(5);

    // 6: (24*alpha / gcd(kappa*(-24*beta - sum delta r_delta), 24*alpha)) | N
    {
        BigInt lhs = BigInt(k) * BigInt(-24 * t.beta - t.r.weighted_exponent_sum());
        BigInt g;
        BigInt mod24a = BigInt(24) * BigInt(alpha);
        mpz_gcd(g.get_mpz_t(), lhs.get_mpz_t(), mod24a.get_mpz_t());
        BigInt quot = mod24a / g;
        if (BigInt(N) % quot != 0) fails.push_back(6);
    }

    // 7: only constrains even alpha
    if (alpha % 2 == 0) {
        auto [s, j] = pi_decomp(t.r);
        const bool first = (k * N) % 4 == 0 && (s * N) % 8 == 0;
        const bool second = s % 2 == 0 && (N * (1 - j)) % 8 == 0;
        if (!(first || second)) fails.push_back(7);
    }

    return fails;
}

long index_gamma0(long N) {
    if (N < 1) throw std::invalid_argument("index_gamma0: N must be positive");
    long index = N;
    long m = N;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        index = index / p * (p + 1);
        while (m % p == 0) m /= p;
    }
    if (m > 1) index = index / m * (m + 1);
    return index;
}

long cusp_count(long N) {
    long total = 0;
    for (long c : divisors(N)) total += euler_phi(std::gcd(c, N / c));
    return total;
}

namespace {

// SL2 completion (a b; c d) of a primitive column (a; c).
CosetRep complete_cusp(const Cusp& cusp) {
    if (cusp.c == 0) {
        if (cusp.a != 1 && cusp.a != -1)
            throw std::invalid_argument("complete_cusp: infinity must be +-1/0");
        return {cusp.a, 0, 0, cusp.a};
    }
    const ExtGcd e = ext_gcd(cusp.a, cusp.c);
    if (e.g != 1) throw std::invalid_argument("complete_cusp: cusp fraction not in lowest terms");
    // a*x + c*y = 1  ->  det (a, -y; c, x) = 1
    return {cusp.a, -e.y, cusp.c, e.x};
}

}  // namespace

bool cusp_equivalent(long N, const Cusp& x, const Cusp& y) {
    const CosetRep gx = complete_cusp(x);
    const CosetRep gy = complete_cusp(y);
    // gamma = gy T^j gx^{-1} lies in Gamma_0(N) for some j iff
    // gcd(c_x c_y, N) divides c_y d_x - c_x d_y.
    const long g = std::gcd(std::abs(x.c * y.c), N);
    const long rhs = y.c * gx.d - x.c * gy.d;
    return g == 0 ? rhs == 0 : rhs % g == 0;
}

std::vector<Cusp> cusp_representatives(long N) {
    if (N < 1) throw std::invalid_argument("cusp_representatives: N must be positive");
    std::vector<Cusp> out;
    for (long c : divisors(N)) {
        const long g = std::gcd(c, N / c);
        for (long x = (g == 1 ? 1 : 1), produced = 0; produced < euler_phi(g); ++x) {
            if (std::gcd(x, g) != 1) continue;
            long a = x;
            while (std::gcd(a, c) != 1) a += g;
            out.push_back({c == 1 ? 0 : a, c});
            ++produced;
        }
    }
    return out;
}

std::vector<CosetRep> cusp_coset_reps(long N) {
    std::vector<CosetRep> out;
    for (const Cusp& cusp : cusp_representatives(N)) {
        CosetRep m = complete_cusp(cusp);
        if (m.c == 0) {
            // left-multiply by (1 0; N 1): stays in the double coset and
            // gives the c >= 1 form the p-values need
            m = {m.a, m.b, N * m.a, N * m.b + m.d};
        }
        if (m.c < 0) m = {-m.a, -m.b, -m.c, -m.d};
        out.push_back(m);
    }
    return out;
}

std::vector<CosetRep> coset_reps(long N) {
    if (N < 1) throw std::invalid_argument("coset_reps: N must be positive");
    if (is_squarefree(N) || (N % 2 == 0 && is_squarefree(N / 2))) {
        std::vector<CosetRep> out;
        for (long d : divisors(N)) out.push_back({1, 0, d, 1});
        return out;
    }
    return cusp_coset_reps(N);
}

Rational p_lower(const CosetRep& gamma, const RaduTuple& t) {
    if (gamma.c < 1)
        throw std::invalid_argument("p_lower: representative must be normalized with c >= 1");
    const long k = kappa(t.alpha);
    const auto& divs = t.r.divisor_list();
    const auto& exps = t.r.exponents();
    Rational best;
    bool have = false;
    for (long lambda = 0; lambda < t.alpha; ++lambda) {
        Rational sum(0);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (exps[i] == 0) continue;
            const BigInt arg = BigInt(divs[i]) * BigInt(gamma.a + k * lambda * gamma.c);
            BigInt g;
            BigInt mod = BigInt(t.alpha) * BigInt(gamma.c);
            mpz_gcd(g.get_mpz_t(), arg.get_mpz_t(), mod.get_mpz_t());
            sum += make_rational(exps[i] * g * g,
                                 BigInt(divs[i]) * BigInt(t.alpha) * BigInt(gamma.c));
        }
        sum /= 24;
        if (!have || sum < best) {
            best = sum;
            have = true;
        }
    }
    return best;
}

Rational p_star(const CosetRep& gamma, const AVector& a) {
    Rational sum(0);
    for (std::size_t i = 0; i < a.divisor_list().size(); ++i) {
        const long g = gcd_ll(a.divisor_list()[i], gamma.c);
        sum += make_rational(BigInt(a.values()[i]) * BigInt(g) * BigInt(g),
                             BigInt(a.divisor_list()[i]));
    }
    sum /= 24;
    return sum;
}

Rational nu_bound(const RaduTuple& t, const AVector& a, const std::vector<long>& orbit_set) {
    if (orbit_set.empty()) throw std::invalid_argument("nu_bound: orbit must be non-empty");
    const long beta_min = *std::min_element(orbit_set.begin(), orbit_set.end());
    const long index = index_gamma0(t.N);
    Rational nu = make_rational(
        BigInt(a.sum() + t.r.exponent_sum()) * BigInt(index) - BigInt(a.weighted_sum()), 24);
    nu -= make_rational(BigInt(t.r.weighted_exponent_sum()), BigInt(24) * BigInt(t.alpha));
    nu -= make_rational(BigInt(beta_min), BigInt(t.alpha));
    return nu;
}

Certificate certify(const RaduTuple& t, const AVector& a) {
    const auto orbit_set = orbit(t);
    const auto reps = coset_reps(t.N);

    Certificate cert{
        .tuple = t,
        .a = a,
        .kappa_value = kappa(t.alpha),
        .pi = pi_decomp(t.r),
        .orbit = orbit_set,
        .beta_min = *std::min_element(orbit_set.begin(), orbit_set.end()),
        .reps = reps,
        .p_values = {},
        .nu = nu_bound(t, a, orbit_set),
        .nu_floor = 0,
        .checked = {},
        .proven = false,
        .failure = {},
    };
    cert.nu_floor = static_cast<long>(rational_floor(cert.nu).get_si());

    const auto fails = delta_star_check(t);
    if (!fails.empty()) {
        cert.failure = "tuple outside Delta*: condition(s)";
        for (int f : fails) cert.failure += " " + std::to_string(f);
        return cert;
    }

    for (const auto& rep : reps) {
        PValuePair pv{p_lower(rep, t), p_star(rep, a)};
        cert.p_values.push_back(pv);
        Rational sum = pv.lower + pv.star;
        if (sum < 0 && cert.failure.empty())
            cert.failure = "negative p-value sum at representative (" + std::to_string(rep.a) +
                           " " + std::to_string(rep.b) + "; " + std::to_string(rep.c) + " " +
                           std::to_string(rep.d) + ")";
    }
    if (!cert.failure.empty()) return cert;

    if (cert.nu_floor < 0) {
        // nothing to check: the progression vanishes vacuously
        cert.proven = true;
        return cert;
    }

    const long max_beta = *std::max_element(orbit_set.begin(), orbit_set.end());
    const std::size_t precision =
        static_cast<std::size_t>(t.alpha * (cert.nu_floor + 1) + max_beta + 1);
    const QSeries<BigInt> f = eta_product(t.r, precision);

    for (long beta_prime : orbit_set) {
        for (long n = 0; n <= cert.nu_floor; ++n) {
            const BigInt& value = f[static_cast<std::size_t>(t.alpha * n + beta_prime)];
            cert.checked.push_back({beta_prime, n, value});
            if (value != 0 && cert.failure.empty())
                cert.failure = "nonzero slice coefficient a(" +
                               std::to_string(t.alpha * n + beta_prime) + ") = " + value.get_str() +
                               " at beta'=" + std::to_string(beta_prime) +
                               ", n=" + std::to_string(n);
        }
    }
    cert.proven = cert.failure.empty();
    return cert;
}

}  // namespace qcrank
