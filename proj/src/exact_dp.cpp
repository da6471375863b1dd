#include "intervagg/exact_dp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace intervagg {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

DPTable::DPTable(std::size_t m, std::size_t n)
    : m_(m), n_(n), hq_(m * n, kNegInf), choice_(m * n, 0) {}

double DPTable::hq(std::size_t i, std::size_t j) const {
    assert(i >= 1 && i <= m_ && j >= 1 && j <= n_);
    return hq_[index(i, j)];
}

std::size_t DPTable::choice(std::size_t i, std::size_t j) const {
    assert(i >= 2 && i <= m_ && j >= 1 && j <= n_);
    return choice_[index(i, j)];
}

DPTable DPTable::compute(std::span<const double> weights, std::size_t m) {
    const std::size_t n = weights.size();
    if (n == 0) {
        throw EmptyInputError();
    }
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    const PrefixSums s = PrefixSums::of_weights(weights);
    DPTable t(m, n);

    for (std::size_t j = 1; j <= n; ++j) {
        const double sj = s.at(j);
        t.hq_[t.index(1, j)] = -sj * std::log2(sj);
    }
    for (std::size_t i = 2; i <= m; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            double best = kNegInf;
            std::size_t best_k = 0;
            for (std::size_t k = i; k <= j; ++k) {
                const double mass = s.block_mass(k, j);
                assert(mass > 0.0);
                const double cand = t.hq_[t.index(i - 1, k - 1)] - mass * std::log2(mass);
                if (cand > best) {  // strict: ties keep the smallest k
                    best = cand;
                    best_k = k;
                }
            }
            t.hq_[t.index(i, j)] = best;
            t.choice_[t.index(i, j)] = best_k;
        }
    }
    return t;
}

ContiguousPartition backtrack(const DPTable& table, std::size_t m, std::size_t n) {
    if (m < 1 || m > table.rows() || n < 1 || n > table.cols() || n < m) {
        throw TableIncompleteError(m, n);
    }
    std::vector<std::size_t> bounds;
    bounds.reserve(m - 1);
    std::size_t j = n;
    for (std::size_t i = m; i >= 2; --i) {
        const std::size_t k = table.choice(i, j);
        if (k == 0) {
            throw TableIncompleteError(i, j);
        }
        bounds.push_back(k - 1);  // the last block of the prefix is [k, j]
        j = k - 1;
    }
    std::reverse(bounds.begin(), bounds.end());
    return ContiguousPartition(n, std::move(bounds));
}

AggregationResult solve_exact(const ProbabilityVector& p, std::size_t m) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    if (m == n) {
        auto partition = ContiguousPartition::identity(n);
        auto q = aggregate(p, partition);
        const double h = entropy(q);
        return {std::move(partition), std::move(q), h, Algorithm::exact};
    }
    if (m == 1) {
        auto partition = ContiguousPartition::single_class(n);
        auto q = aggregate(p, partition);
        const double h = entropy(q);
        return {std::move(partition), std::move(q), h, Algorithm::exact};
    }
    const DPTable table = DPTable::compute(p.weights(), m);
    auto partition = backtrack(table, m, n);
    auto q = aggregate(p, partition);
    return {std::move(partition), std::move(q), table.optimum(), Algorithm::exact};
}

}  // namespace intervagg
