#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qcrank/numeric.hpp"

namespace qcrank {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;

    long weight() const {
        long n = 0;
        for (long p : parts) n += p;
        return n;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// The three quantities entering the crank: largest part, number of 1's,
/// and the number of parts exceeding the number of 1's.
struct CrankStats {
    long largest = 0;
    long ones = 0;
    long bigcount = 0;
};

CrankStats crank_stats(const Partition& p);

/// largest part when no 1's are present, else bigcount - ones. The empty
/// partition takes the no-1's branch with largest part 0.
long crank(const Partition& p);

/// Enumeration cutoff: 60 unless the QCRANK_ORACLE_LIMIT environment
/// variable overrides it. p(60) is about 10^6, which keeps brute-force
/// runs interactive.
long oracle_limit();

namespace detail {
void check_oracle_limit(long n);

template <typename Visitor>
void visit_partitions(std::vector<long>& stack, long remaining, long max_part, Visitor& visit) {
    if (remaining == 0) {
        visit(stack);
        return;
    }
    for (long first = std::min(remaining, max_part); first >= 1; --first) {
        stack.push_back(first);
        visit_partitions(stack, remaining - first, first, visit);
        stack.pop_back();
    }
}
}  // namespace detail

/// Visits every partition of n exactly once (parts weakly decreasing).
/// The callback receives the parts vector; it must not retain the reference.
template <typename Visitor>
void for_each_partition(long n, Visitor visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be non-negative");
    detail::check_oracle_limit(n);
    std::vector<long> stack;
    detail::visit_partitions(stack, n, n == 0 ? 1 : n, visit);
}

std::vector<Partition> enumerate_partitions(long n);

/// Exhaustive crank tabulation M(m, n) for 0 <= n <= n_max.
class CrankTable {
public:
    explicit CrankTable(long n_max) : rows_(static_cast<std::size_t>(n_max + 1)), n_max_(n_max) {}

    long n_max() const noexcept { return n_max_; }

    std::uint64_t count(long m, long n) const;
    const std::map<long, std::uint64_t>& row(long n) const;
    std::uint64_t partitions_of(long n) const;  // sum_m M(m, n)

    void add(long m, long n) { ++rows_[static_cast<std::size_t>(n)][m]; }

private:
    std::vector<std::map<long, std::uint64_t>> rows_;
    long n_max_;
};

CrankTable crank_table(long n_max, unsigned jobs = 0);

Partition conjugate(const Partition& p);

/// Hook lengths (arm + leg + 1) of every cell of the Young diagram,
/// sorted ascending.
std::vector<long> hook_multiset(const Partition& p);

/// Number of partitions of n with no hook length divisible by t.
std::uint64_t count_t_core(long n, long t);

}  // namespace qcrank
