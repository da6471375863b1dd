#include "intervagg/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace intervagg {

ProbabilityVector ProbabilityVector::unchecked(std::vector<double> weights) {
    assert(!weights.empty());
    return ProbabilityVector(std::move(weights));
}

ProbabilityVector validate_distribution(std::vector<double> raw, ValidationMode mode,
                                        double sum_eps) {
    if (raw.empty()) {
        throw EmptyInputError();
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] > 0.0)) {
            throw NonPositiveComponentError(i + 1, raw[i]);
        }
    }
    const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (mode == ValidationMode::strict) {
        if (std::abs(sum - 1.0) > sum_eps) {
            throw SumOutOfToleranceError(sum);
        }
        return ProbabilityVector::unchecked(std::move(raw));
    }
    for (double& w : raw) {
        w /= sum;
    }
    return ProbabilityVector::unchecked(std::move(raw));
}

PrefixSums PrefixSums::of_weights(std::span<const double> weights) {
    std::vector<double> s(weights.size() + 1, 0.0);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        s[j + 1] = s[j] + weights[j];
    }
    return PrefixSums(std::move(s));
}

PrefixSums::PrefixSums(const ProbabilityVector& p) : PrefixSums(of_weights(p.weights())) {}

PrefixSums prefix_sums(const ProbabilityVector& p) { return PrefixSums(p); }

ContiguousPartition::ContiguousPartition(std::size_t n, std::vector<std::size_t> boundaries)
    : n_(n), boundaries_(std::move(boundaries)) {
    if (n_ == 0) {
        throw EmptyInputError();
    }
    std::size_t prev = 0;
    for (std::size_t b : boundaries_) {
        if (b <= prev || b >= n_) {
            throw Error("boundary " + std::to_string(b) + " breaks 0 < i_1 < ... < i_{m-1} < " +
                        std::to_string(n_));
        }
        prev = b;
    }
}

ContiguousPartition ContiguousPartition::single_class(std::size_t n) {
    return ContiguousPartition(n, {});
}

ContiguousPartition ContiguousPartition::identity(std::size_t n) {
    std::vector<std::size_t> bounds(n - 1);
    std::iota(bounds.begin(), bounds.end(), std::size_t{1});
    return ContiguousPartition(n, std::move(bounds));
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::exact: return "exact";
        case Algorithm::greedy1: return "greedy1";
        case Algorithm::greedy2: return "greedy2";
        case Algorithm::oracle: return "oracle";
    }
    return "unknown";
}

double entropy_bits(std::span<const double> weights) {
    double acc = 0.0;
    for (double w : weights) {
        assert(w > 0.0);
        acc += w * std::log2(w);
    }
    return -acc;
}

double entropy(const ProbabilityVector& v) { return entropy_bits(v.weights()); }

double entropy_like_sum(std::span<const double> weights, double sum_eps) {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || weights[i] > 1.0) {
            throw ComponentOutOfRangeError(i + 1, weights[i]);
        }
        sum += weights[i];
    }
    if (sum > 1.0 + sum_eps) {
        throw SumOutOfToleranceError(sum);
    }
    return entropy_bits(weights);
}

ProbabilityVector aggregate(const ProbabilityVector& p, const ContiguousPartition& partition) {
    if (partition.source_size() != p.size()) {
        throw LengthMismatchError(partition.source_size(), p.size());
    }
    const PrefixSums s(p);
    const std::size_t m = partition.classes();
    std::vector<double> q(m);
    for (std::size_t j = 1; j <= m; ++j) {
        q[j - 1] = s.block_mass(partition.class_first(j), partition.class_last(j));
    }
    return ProbabilityVector::unchecked(std::move(q));
}

namespace {

// Non-increasing stable sort; tie order never affects the prefix sums below.
std::vector<double> sorted_desc(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    std::stable_sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

}  // namespace

bool majorizes(std::span<const double> a, std::span<const double> b, const Tolerances& tol) {
    const double sum_a = std::accumulate(a.begin(), a.end(), 0.0);
    const double sum_b = std::accumulate(b.begin(), b.end(), 0.0);
    if (std::abs(sum_a - sum_b) > tol.sum_eps) {
        throw SumMismatchError(sum_a, sum_b);
    }
    std::vector<double> sa = sorted_desc(a);
    std::vector<double> sb = sorted_desc(b);
    const std::size_t len = std::max(sa.size(), sb.size());
    sa.resize(len, 0.0);  // zero padding of the shorter vector
    sb.resize(len, 0.0);
    double pa = 0.0;
    double pb = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        pa += sa[i];
        pb += sb[i];
        if (pa > pb + tol.cmp_eps) {
            return false;
        }
    }
    return true;
}

}  // namespace intervagg
