#include "qcrank/partition_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcrank/parallel.hpp"

namespace qcrank {

CrankStats crank_stats(const Partition& p) {
    CrankStats s;
    if (p.parts.empty()) return s;
    s.largest = p.parts.front();
    for (long part : p.parts)
        if (part == 1) ++s.ones;
    for (long part : p.parts)
        if (part > s.ones) ++s.bigcount;
    return s;
}

long crank(const Partition& p) {
    const CrankStats s = crank_stats(p);
    if (s.ones == 0) return s.largest;
    return s.bigcount - s.ones;
}

long oracle_limit() {
    if (const char* env = std::getenv("QCRANK_ORACLE_LIMIT")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("QCRANK_ORACLE_LIMIT: not an integer");
        }
    }
    return 60;
}

namespace detail {
void check_oracle_limit(long n) {
    const long limit = oracle_limit();
    if (n > limit)
        throw std::invalid_argument("partition enumeration limited to n <= " +
                                    std::to_string(limit) +
                                    " (override with QCRANK_ORACLE_LIMIT)");
}
}  // namespace detail

std::vector<Partition> enumerate_partitions(long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<long>& parts) { out.push_back(Partition{parts}); });
    return out;
}

std::uint64_t CrankTable::count(long m, long n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("CrankTable: n out of range");
    const auto& r = rows_[static_cast<std::size_t>(n)];
    auto it = r.find(m);
    return it == r.end() ? 0 : it->second;
}

const std::map<long, std::uint64_t>& CrankTable::row(long n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("CrankTable: n out of range");
    return rows_[static_cast<std::size_t>(n)];
}

std::uint64_t CrankTable::partitions_of(long n) const {
    std::uint64_t total = 0;
    for (const auto& [m, c] : row(n)) total += c;
    return total;
}

CrankTable crank_table(long n_max, unsigned jobs) {
    if (n_max < 0) throw std::invalid_argument("crank_table: n_max must be non-negative");
    detail::check_oracle_limit(n_max);
    CrankTable table(n_max);
    parallel_for(static_cast<std::size_t>(n_max + 1), jobs, [&](std::size_t n) {
        // rows are disjoint, so per-n construction is safe to run in parallel
        for_each_partition(static_cast<long>(n), [&](const std::vector<long>& parts) {
            table.add(crank(Partition{parts}), static_cast<long>(n));
        });
    });
    return table;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.parts.empty()) return out;
    for (long j = 0; j < p.parts.front(); ++j) {
        long count = 0;
        for (long part : p.parts)
            if (part > j) ++count;
        out.parts.push_back(count);
    }
    return out;
}

std::vector<long> hook_multiset(const Partition& p) {
    std::vector<long> hooks;
    if (p.parts.empty()) return hooks;
    const Partition conj = conjugate(p);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (long j = 0; j < p.parts[i]; ++j) {
            const long arm = p.parts[i] - j - 1;
            const long leg = conj.parts[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1;
            hooks.push_back(arm + leg + 1);
        }
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

std::uint64_t count_t_core(long n, long t) {
    if (t < 2) throw std::invalid_argument("count_t_core: t must be at least 2");
    if (n < 0) throw std::invalid_argument("count_t_core: n must be non-negative");
    std::uint64_t count = 0;
    for_each_partition(n, [&](const std::vector<long>& parts) {
        for (long h : hook_multiset(Partition{parts}))
            if (h % t == 0) return;
        ++count;
    });
    return count;
}

}  // namespace qcrank
