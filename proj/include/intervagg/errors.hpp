#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace intervagg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("input sequence is empty") {}
};

/// A weight that must be strictly positive is zero or negative.
/// Component indices are 1-based, like boundary indices.
class NonPositiveComponentError : public Error {
public:
    NonPositiveComponentError(std::size_t index, double value)
        : Error("component " + std::to_string(index) + " is not strictly positive (value " +
                std::to_string(value) + ")"),
          index(index),
          value(value) {}
    std::size_t index;
    double value;
};

class SumOutOfToleranceError : public Error {
public:
    explicit SumOutOfToleranceError(double sum)
        : Error("weights sum to " + std::to_string(sum) + ", expected 1 within tolerance"),
          sum(sum) {}
    double sum;
};

/// A sub-probability component outside (0, 1].
class ComponentOutOfRangeError : public Error {
public:
    ComponentOutOfRangeError(std::size_t index, double value)
        : Error("component " + std::to_string(index) + " is outside (0, 1] (value " +
                std::to_string(value) + ")"),
          index(index),
          value(value) {}
    std::size_t index;
    double value;
};

/// Two sequences compared under majorization have different totals.
class SumMismatchError : public Error {
public:
    SumMismatchError(double sum_a, double sum_b)
        : Error("sequence totals differ: " + std::to_string(sum_a) + " vs " +
                std::to_string(sum_b)),
          sum_a(sum_a),
          sum_b(sum_b) {}
    double sum_a;
    double sum_b;
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t expected, std::size_t got)
        : Error("partition is over " + std::to_string(expected) + " elements but the vector has " +
                std::to_string(got)) {}
};

class InvalidMError : public Error {
public:
    InvalidMError(std::size_t m, std::size_t n)
        : Error("class count m = " + std::to_string(m) + " outside [1, " + std::to_string(n) + "]"),
          m(m),
          n(n) {}
    std::size_t m;
    std::size_t n;
};

/// Exhaustive enumeration would exceed the configured candidate budget.
class InstanceTooLargeError : public Error {
public:
    InstanceTooLargeError(std::uint64_t candidates, std::uint64_t limit)
        : Error("enumeration of " + std::to_string(candidates) + " partitions exceeds limit " +
                std::to_string(limit)),
          candidates(candidates),
          limit(limit) {}
    std::uint64_t candidates;
    std::uint64_t limit;
};

class TableIncompleteError : public Error {
public:
    TableIncompleteError(std::size_t i, std::size_t j)
        : Error("table holds no solution at row " + std::to_string(i) + ", column " +
                std::to_string(j)) {}
};

}  // namespace intervagg
