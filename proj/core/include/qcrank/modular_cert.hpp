#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcrank/numeric.hpp"
#include "qcrank/qseries.hpp"

namespace qcrank {

/// Input tuple (alpha, M, N, r, beta) of the coefficient-vanishing lemma.
/// M and r live inside the eta-quotient spec.
struct RaduTuple {
    long alpha;
    EtaQuotientSpec r;
    long N;
    long beta;

    long level() const noexcept { return r.level(); }
};

/// Auxiliary exponent vector a = (a_delta), indexed by the divisors of N
/// in ascending order.
class AVector {
public:
    AVector(long N, std::vector<long> values_by_divisor);

    long N() const noexcept { return n_; }
    const std::vector<long>& divisor_list() const noexcept { return divisors_; }
    const std::vector<long>& values() const noexcept { return values_; }

    long sum() const;
    long weighted_sum() const;  // sum delta * a_delta

private:
    long n_;
    std::vector<long> divisors_;
    std::vector<long> values_;
};

/// Element of SL2(Z); the lemma's p-values require the normalized form
/// with lower-left entry c >= 1.
struct CosetRep {
    long a, b, c, d;

    friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

/// Cusp a/c of the upper half-plane boundary; c == 0 encodes infinity.
struct Cusp {
    long a, c;

    friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// kappa = gcd(alpha^2 - 1, 24).
long kappa(long alpha);

/// (s, j) with prod_{delta|M} delta^{|r_delta|} = 2^s * j, j odd. s may be
/// zero (odd products admit no other consistent reading).
std::pair<long, long> pi_decomp(const EtaQuotientSpec& r);

/// Squares of the units of Z/modulus, as least non-negative representatives,
/// sorted ascending.
std::vector<long> squares_set(long modulus);

/// The square-class action: beta*s + (s-1)/24 * sum(delta r_delta) mod alpha.
/// s must be the least representative of a class in squares_set(24*alpha),
/// hence congruent to 1 mod 24.
long square_class_act(long s, long beta, const RaduTuple& t);

/// Orbit P_{alpha,r}(beta) of beta under all square classes, sorted.
std::vector<long> orbit(const RaduTuple& t);

/// Evaluates the seven admissibility conditions; returns the list of failed
/// condition numbers (empty means the tuple is admissible). Condition 7 is
/// only evaluated when alpha is even. Condition 6 uses 24*alpha in the
/// numerator; see the project README for the rationale.
std::vector<int> delta_star_check(const RaduTuple& t);

/// [SL2(Z) : Gamma_0(N)] = N * prod_{p|N} (1 + 1/p).
long index_gamma0(long N);

/// Number of cusp classes of Gamma_0(N): sum_{c|N} phi(gcd(c, N/c)).
long cusp_count(long N);

/// Exact Gamma_0(N)-equivalence of two cusps (solvability of
/// g2 T^j g1^{-1} in Gamma_0(N)).
bool cusp_equivalent(long N, const Cusp& x, const Cusp& y);

/// One representative per cusp class: fractions a/c with c | N,
/// gcd(a, c) = 1, a running over residues mod gcd(c, N/c). The class of
/// infinity appears as 1/N.
std::vector<Cusp> cusp_representatives(long N);

/// Completion of each cusp representative to a determinant-1 matrix with
/// lower-left entry c >= 1. Valid double-coset representatives for
/// Gamma_0(N)\Gamma/Gamma_inf at every level.
std::vector<CosetRep> cusp_coset_reps(long N);

/// Double-coset representatives: the (1 0; delta 1) shortcut when N or N/2
/// is square-free, the cusp-based list otherwise.
std::vector<CosetRep> coset_reps(long N);

/// min over lambda in {0,...,alpha-1} of
/// (1/24) sum_{delta|M} r_delta gcd^2(delta(a + kappa lambda c), alpha c) / (delta alpha c).
/// The representative must be normalized (c >= 1).
Rational p_lower(const CosetRep& gamma, const RaduTuple& t);

/// (1/24) sum_{delta|N} a_delta gcd^2(delta, c) / delta.
Rational p_star(const CosetRep& gamma, const AVector& a);

/// The coefficient-check bound: vanishing of slice coefficients up to
/// floor(nu) extends to the whole progression.
Rational nu_bound(const RaduTuple& t, const AVector& a, const std::vector<long>& orbit_set);

/// One checked slice coefficient.
struct CheckedCoefficient {
    long beta;
    long n;
    BigInt value;
};

struct PValuePair {
    Rational lower;
    Rational star;
};

/// Everything the lemma run produced: admissibility, orbit, representatives,
/// p-values, the nu bound, and the checked coefficients. verdict_proven
/// requires admissibility, non-negative p-sums, and all checked
/// coefficients zero.
struct Certificate {
    RaduTuple tuple;
    AVector a;
    long kappa_value;
    std::pair<long, long> pi;
    std::vector<long> orbit;
    long beta_min;
    std::vector<CosetRep> reps;
    std::vector<PValuePair> p_values;
    Rational nu;
    long nu_floor;
    std::vector<CheckedCoefficient> checked;
    bool proven;
    std::string failure;  // empty when proven
};

/// Runs the full lemma: admissibility, orbit, double-coset representatives,
/// p-value non-negativity, the nu bound, and the slice checks of the eta
/// quotient expanded to precision alpha*(floor(nu)+1) + max(orbit) + 1.
/// Mathematical failures land in the verdict, not in exceptions.
Certificate certify(const RaduTuple& t, const AVector& a);

}  // namespace qcrank
