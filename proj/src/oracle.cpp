#include "intervagg/oracle.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

namespace intervagg {

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t m) : n_(n), m_(m) {
    if (n == 0) {
        throw EmptyInputError();
    }
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    cursor_.resize(m - 1);
    std::iota(cursor_.begin(), cursor_.end(), std::size_t{1});
}

std::optional<ContiguousPartition> PartitionEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        return ContiguousPartition(n_, cursor_);
    }
    // Advance the rightmost cut that still has room; slot t may hold at most
    // n - (m-1) + t.
    const std::size_t slots = cursor_.size();
    std::size_t t = slots;
    while (t > 0) {
        --t;
        if (cursor_[t] < n_ - slots + t) {
            ++cursor_[t];
            for (std::size_t u = t + 1; u < slots; ++u) {
                cursor_[u] = cursor_[u - 1] + 1;
            }
            return ContiguousPartition(n_, cursor_);
        }
    }
    done_ = true;
    return std::nullopt;
}

std::uint64_t partition_count(std::size_t n, std::size_t m) {
    if (n == 0) {
        throw EmptyInputError();
    }
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    // C(n-1, m-1) with the symmetric smaller index; saturate on overflow.
    const std::uint64_t top = n - 1;
    std::uint64_t k = m - 1;
    if (k > top - k) {
        k = top - k;
    }
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (top - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

AggregationResult brute_force(const ProbabilityVector& p, std::size_t m,
                              std::uint64_t max_candidates, double tie_eps) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    const std::uint64_t candidates = partition_count(n, m);
    if (candidates > max_candidates) {
        throw InstanceTooLargeError(candidates, max_candidates);
    }
    const PrefixSums s(p);

    double best_h = -std::numeric_limits<double>::infinity();
    std::optional<ContiguousPartition> best;
    PartitionEnumerator enumerator(n, m);
    std::uint64_t seen = 0;
    while (auto partition = enumerator.next()) {
        ++seen;
        double h = 0.0;
        for (std::size_t c = 1; c <= m; ++c) {
            const double mass = s.block_mass(partition->class_first(c), partition->class_last(c));
            h -= mass * std::log2(mass);
        }
        // Lexicographic enumeration plus a strict improvement margin keeps
        // the smallest boundary tuple among near-ties.
        if (h > best_h + tie_eps || !best) {
            best_h = h;
            best = std::move(partition);
        }
    }
    assert(seen == candidates);
    ProbabilityVector q = aggregate(p, *best);
    return {std::move(*best), std::move(q), best_h, Algorithm::oracle};
}

}  // namespace intervagg
