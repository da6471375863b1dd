#pragma once

#include "intervagg/core.hpp"

namespace intervagg {

/// Diagnostic measures computed on an aggregated distribution.
struct MetricsReport {
    double entropy_bits;
    double mutual_information_bits;  // equals entropy for deterministic aggregation
    double fano_dispersion;
    double guessing_entropy;
    double identity_residual;
};

/// I(X; f(X)) for a deterministic aggregation f equals H(f(X)); exposed
/// under its information-theoretic name for reporting.
double mutual_information_view(const ProbabilityVector& q);

/// (1/m) sum_i sum_j |q_i - q_j|; zero iff q is uniform. This is the balance
/// criterion minimized by the classical recursive-split coding heuristic.
double fano_dispersion(const ProbabilityVector& q);

/// sum_i i * q_[i] over the non-increasingly sorted components: the expected
/// number of guesses to hit a sample when guessing in likelihood order.
/// Ranges over [1, m].
double guessing_entropy(const ProbabilityVector& q);

/// |fano_dispersion - (2 + 2/m - (4/m) guessing_entropy)|, the two sides
/// evaluated independently. Mathematically zero for every distribution;
/// minimizing the dispersion is the same as maximizing the guessing entropy.
double dispersion_identity_residual(const ProbabilityVector& q);

MetricsReport metrics_report(const ProbabilityVector& q);

}  // namespace intervagg
