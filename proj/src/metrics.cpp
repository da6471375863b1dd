#include "intervagg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace intervagg {

double mutual_information_view(const ProbabilityVector& q) { return entropy(q); }

double fano_dispersion(const ProbabilityVector& q) {
    const std::size_t m = q.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            total += std::abs(q[i] - q[j]);
        }
    }
    return total / static_cast<double>(m);
}

double guessing_entropy(const ProbabilityVector& q) {
    std::vector<double> sorted = q.weights();
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        acc += static_cast<double>(i + 1) * sorted[i];
    }
    return acc;
}

double dispersion_identity_residual(const ProbabilityVector& q) {
    const double m = static_cast<double>(q.size());
    const double rhs = 2.0 + 2.0 / m - (4.0 / m) * guessing_entropy(q);
    return std::abs(fano_dispersion(q) - rhs);
}

MetricsReport metrics_report(const ProbabilityVector& q) {
    MetricsReport r;
    r.entropy_bits = entropy(q);
    r.mutual_information_bits = mutual_information_view(q);
    r.fano_dispersion = fano_dispersion(q);
    r.guessing_entropy = guessing_entropy(q);
    r.identity_residual = dispersion_identity_residual(q);
    return r;
}

}  // namespace intervagg
