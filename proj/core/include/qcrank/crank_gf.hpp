#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcrank/modular_cert.hpp"
#include "qcrank/qseries.hpp"

namespace qcrank {

/// Shape of the crank product C^(t): the exponent of the plain
/// (1 - q^{tn}) factor plus the list of twist exponents k of the
/// (1 - zeta^{+-k} q^{tn}) pairs. The numerator also carries one
/// (1 - q^n) and the denominator the fixed (1 - zeta^{+-1} q^n) pair,
/// so setting zeta = 1 leaves tcore_power + 2*|twists| = t copies of
/// (1 - q^{tn}) over a single (1 - q^n).
struct CrankProductSpec {
    long t;
    long tcore_power;
    std::vector<long> twists;

    /// The five supported products; rejects other t.
    static CrankProductSpec for_t(long t);
};

/// Supported t values, ascending.
const std::vector<long>& supported_t();

/// Congruence classes the crank product certifies for 3t*n + beta, per t.
const std::vector<long>& theorem_classes(long t);

/// The classical two-variable crank product
/// prod (1-q^n) / ((1-zeta q^n)(1-zeta^{-1} q^n)) over Z[zeta]/Phi_ell.
QSeries<CycElem> build_crank_gf(long ell, std::size_t precision);

/// prod (1-q^{tn})^t / (1-q^n): the t-core counting function.
QSeries<BigInt> build_tcore_gf(long t, std::size_t precision);

/// The twisted product C^(t) over Z[zeta]/Phi_3.
QSeries<CycElem> build_tcore_crank_gf(long t, std::size_t precision);

/// Integer-ring rebuild of the same product with every zeta replaced by 1.
/// Expanded factor by factor, so comparing it against build_tcore_gf is a
/// genuine expansion check of the exponent bookkeeping.
QSeries<BigInt> build_tcore_crank_gf_at_one(long t, std::size_t precision);

/// Mod-Phi_3 image of C^(t) as an eta quotient over level 3t, together with
/// the exponent j of the discarded (1 - q^{3tn}) factor.
struct ReductionResult {
    EtaQuotientSpec spec;
    long j;
    std::size_t verified_to;
};

/// First index where C^(t) and eta * (prod (1-q^{3tn}))^j disagree in
/// Z[zeta]/Phi_3, or nullopt if they agree up to the precision.
std::optional<std::size_t> reduction_mismatch(long t, const EtaQuotientSpec& spec, long j,
                                              std::size_t precision);

/// Derives the reduced eta quotient and j from the product shape and
/// verifies the congruence coefficientwise before returning; throws on a
/// mismatch, naming the offending index.
ReductionResult reduce_mod_phi3(long t, std::size_t verify_precision);

/// The lemma tuple used to certify the orbit of beta for this t, and the
/// auxiliary a-vector that goes with it.
RaduTuple proof_tuple(long t, long beta);
AVector proof_avector(long t);

/// Residues beta whose orbits jointly cover the certified classes.
const std::vector<long>& proof_betas(long t);

/// End-to-end verdict for one t: certificates per orbit, the direct
/// coefficient check of C^(t), and the classification of every residue
/// class as explained or not.
struct VerificationReport {
    long t = 0;
    std::vector<long> explained;              // direct check passes for n <= bound
    std::vector<long> theorem_list;           // published classes
    std::vector<long> unexplained_vanishing;  // scan-vanishing but not explained
    std::vector<Certificate> certificates;
    std::optional<ReductionResult> reduction;
    long direct_check_bound = 0;
    bool theorem_match = false;  // explained set equals the published list

    bool all_certificates_proven() const {
        for (const auto& cert : certificates)
            if (!cert.proven) return false;
        return true;
    }
};

/// Runs the whole pipeline for one t: the mod-Phi_3 reduction, one
/// certificate per proof orbit, the direct cyclotomic check of
/// [q^{3tn+beta}] C^(t) for n <= n_max_direct, and the explained /
/// unexplained classification of every beta in {0,...,3t-1}.
VerificationReport verify_theorem(long t, long n_max_direct, unsigned jobs = 0);

/// All beta in {0,...,alpha-1} whose progression coefficients of the t-core
/// counting function vanish mod the given modulus for every n <= n_max.
std::vector<long> scan(long t, long modulus, long alpha, long n_max);

}  // namespace qcrank
