#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "intervagg/core.hpp"

namespace intervagg {

/// Table for the contiguous-aggregation recurrence over prefix sums.
///
/// hq(i, j) is the maximum entropy-like sum achievable by splitting the first
/// j weights into i consecutive blocks:
///
///   hq(1, j) = -s_j log2 s_j
///   hq(i, j) = max_{k=i..j} { hq(i-1, k-1) - (s_j - s_{k-1}) log2 (s_j - s_{k-1}) }
///
/// choice(i, j) records the smallest maximizing k, i.e. the start of the last
/// block; cells with j < i are infeasible and hold -infinity.
class DPTable {
public:
    /// Fills rows 1..m over strictly positive weights. The weights may be a
    /// prefix of a distribution (total below 1); the recurrence never needs
    /// the total to be 1.
    static DPTable compute(std::span<const double> weights, std::size_t m);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    double hq(std::size_t i, std::size_t j) const;             // 1-based
    std::size_t choice(std::size_t i, std::size_t j) const;    // defined for i >= 2

    double optimum() const { return hq(m_, n_); }

private:
    DPTable(std::size_t m, std::size_t n);
    std::size_t index(std::size_t i, std::size_t j) const { return (i - 1) * n_ + (j - 1); }

    std::size_t m_;
    std::size_t n_;
    std::vector<double> hq_;
    std::vector<std::size_t> choice_;  // 0 marks an unset cell
};

/// Recovers the optimal i-block split of the first j weights by walking the
/// choice entries from (m, n) down to row 1. Row m = 1 emits no boundary.
ContiguousPartition backtrack(const DPTable& table, std::size_t m, std::size_t n);

/// Maximum-entropy contiguous m-aggregation, O(n^2 m) time and O(nm) space.
/// m = 1 and m = n skip the table and return the closed-form partitions.
AggregationResult solve_exact(const ProbabilityVector& p, std::size_t m);

}  // namespace intervagg
