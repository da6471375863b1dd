#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "intervagg/core.hpp"

namespace intervagg {

/// Streams every contiguous partition of {1..n} into m classes, i.e. every
/// (m-1)-subset of cut points from {1..n-1}, in lexicographic boundary order.
class PartitionEnumerator {
public:
    PartitionEnumerator(std::size_t n, std::size_t m);

    /// Next partition, or nullopt once all C(n-1, m-1) have been emitted.
    std::optional<ContiguousPartition> next();

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<std::size_t> cursor_;
    bool started_ = false;
    bool done_ = false;
};

/// C(n-1, m-1), saturating at the uint64 maximum.
std::uint64_t partition_count(std::size_t n, std::size_t m);

/// Exhaustive maximizer over all contiguous m-aggregations; the ground truth
/// the faster solvers are checked against. Entropy ties within tie_eps keep
/// the lexicographically smallest boundary tuple. Refuses instances with more
/// than max_candidates partitions.
AggregationResult brute_force(const ProbabilityVector& p, std::size_t m,
                              std::uint64_t max_candidates = 10'000'000,
                              double tie_eps = 1e-12);

}  // namespace intervagg
