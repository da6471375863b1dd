#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "intervagg/errors.hpp"

namespace intervagg {

/// Comparison tolerances shared across the library. sum_eps bounds how far a
/// weight vector's total may drift from 1; cmp_eps is the slack applied when
/// comparing derived floating-point quantities.
struct Tolerances {
    double sum_eps = 1e-9;
    double cmp_eps = 1e-12;
};

enum class ValidationMode { strict, renormalize };

/// A discrete distribution: strictly positive weights summing to 1.
/// Construct through validate_distribution(), or through unchecked() when the
/// invariants are guaranteed by construction (e.g. block sums of a valid
/// distribution).
class ProbabilityVector {
public:
    static ProbabilityVector unchecked(std::vector<double> weights);

    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }  // 0-based

    auto begin() const { return weights_.begin(); }
    auto end() const { return weights_.end(); }

private:
    explicit ProbabilityVector(std::vector<double> weights) : weights_(std::move(weights)) {}
    std::vector<double> weights_;
};

/// strict mode accepts the weights unchanged when all are positive and the sum
/// is within sum_eps of 1; renormalize mode divides by the (positive) total,
/// which turns histogram counts into a distribution.
ProbabilityVector validate_distribution(std::vector<double> raw, ValidationMode mode,
                                        double sum_eps = 1e-9);

/// Running sums s_0 = 0, s_j = w_1 + ... + w_j, built in one pass.
/// Strictly increasing because every weight is positive.
class PrefixSums {
public:
    explicit PrefixSums(const ProbabilityVector& p);
    static PrefixSums of_weights(std::span<const double> weights);

    std::size_t count() const { return s_.size() - 1; }  // n
    double at(std::size_t j) const { return s_[j]; }     // s_j, j in [0, n]

    /// Mass of the block [first, last] (1-based, inclusive): s_last - s_{first-1}.
    /// Every aggregated mass in the library is computed through this, so the
    /// exact and greedy solvers see bit-identical block values.
    double block_mass(std::size_t first, std::size_t last) const {
        return s_[last] - s_[first - 1];
    }

    const std::vector<double>& values() const { return s_; }

private:
    explicit PrefixSums(std::vector<double> s) : s_(std::move(s)) {}
    std::vector<double> s_;
};

PrefixSums prefix_sums(const ProbabilityVector& p);

/// A split of {1..n} into m runs of consecutive indices, stored as the m-1
/// interior cut positions i_1 < ... < i_{m-1} drawn from {1..n-1}; cut i means
/// "after element i". The implied outer cuts are i_0 = 0 and i_m = n.
class ContiguousPartition {
public:
    ContiguousPartition(std::size_t n, std::vector<std::size_t> boundaries);

    static ContiguousPartition single_class(std::size_t n);  // m = 1
    static ContiguousPartition identity(std::size_t n);      // m = n

    std::size_t source_size() const { return n_; }
    std::size_t classes() const { return boundaries_.size() + 1; }  // m
    const std::vector<std::size_t>& boundaries() const { return boundaries_; }

    /// First/last source index (1-based, inclusive) of class j in [1, m].
    std::size_t class_first(std::size_t j) const { return (j == 1 ? 0 : boundaries_[j - 2]) + 1; }
    std::size_t class_last(std::size_t j) const {
        return j == classes() ? n_ : boundaries_[j - 1];
    }

private:
    std::size_t n_;
    std::vector<std::size_t> boundaries_;
};

enum class Algorithm { exact, greedy1, greedy2, oracle };

std::string algorithm_name(Algorithm a);

/// A partition together with the aggregated distribution it induces.
struct AggregationResult {
    ContiguousPartition partition;
    ProbabilityVector q;
    double entropy_bits;
    Algorithm algorithm;
};

/// Shannon entropy in bits: -sum v_i log2 v_i. Lies in [0, log2 n].
double entropy(const ProbabilityVector& v);

/// Raw entropy accumulator over strictly positive weights; no validation.
double entropy_bits(std::span<const double> weights);

/// -sum w_i log2 w_i for a sub-probability sequence: every w_i must lie in
/// (0, 1] and the total must not exceed 1 + sum_eps. Coincides with entropy
/// when the weights sum to 1.
double entropy_like_sum(std::span<const double> weights, double sum_eps = 1e-9);

/// The aggregated distribution q with q_j = s_{i_j} - s_{i_{j-1}}.
ProbabilityVector aggregate(const ProbabilityVector& p, const ContiguousPartition& partition);

/// True iff a is majorized by b (a precedes b in the majorization order):
/// after sorting both non-increasingly and zero-padding the shorter one to
/// common length, every prefix sum of a is at most the corresponding prefix
/// sum of b plus tol.cmp_eps. The totals must agree within tol.sum_eps.
bool majorizes(std::span<const double> a, std::span<const double> b, const Tolerances& tol = {});

}  // namespace intervagg
