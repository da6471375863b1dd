#pragma once

#include <cstddef>
#include <vector>

#include "intervagg/core.hpp"

namespace intervagg {

/// One aggregated block during greedy construction. start/end are 1-based
/// inclusive source indices; mass is always the prefix-sum difference
/// s_end - s_{start-1}. marked flags a composite block in (3/2m, 2/m] that is
/// eligible for priority splitting; only composite blocks carry the flag.
struct SegmentRecord {
    std::size_t start;
    std::size_t end;
    double mass;
    bool marked;

    bool composite() const { return start < end; }
};

/// Bookkeeping exposed alongside each greedy result, enough to re-derive the
/// quantities the additive-gap guarantees are built from.
///
/// k_star counts output components heavier than 2/m (always singletons that
/// coincide with the heaviest source weights); A = 1 minus their total mass;
/// B is their entropy contribution. For the refined solver, A1 is the mass of
/// marked blocks that were never split and A2 = A - A1; the split order
/// guarantees A2 >= A/2. k1/k2/k3 count the components created by the three
/// block-closing cases of the refined solver (zero for the linear one).
struct GreedyDiagnostics {
    std::size_t phase1_components = 0;
    std::size_t splits_performed = 0;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t k3 = 0;
    std::size_t k_star = 0;
    double A = 0.0;
    double A1 = 0.0;
    double A2 = 0.0;
    double B = 0.0;
    std::vector<SegmentRecord> phase1_segments;  // blocks before any split
    std::vector<SegmentRecord> segments;         // final blocks, left to right
};

struct GreedyOutput {
    AggregationResult result;
    GreedyDiagnostics diagnostics;
};

/// Linear-time greedy aggregation. Phase 1 packs consecutive weights while
/// the running block stays within 2/m (a single weight above 2/m becomes its
/// own block); phase 2 detaches the first weight of the leftmost composite
/// blocks until exactly m blocks exist. The result is within an additive
/// entropy gap of 2/(e ln 2) ~ 1.0615 bits of the optimum.
GreedyOutput greedy1(const ProbabilityVector& p, std::size_t m);

/// Refined greedy aggregation in O(n + m log m). Phase 1 accumulates up to
/// 1/m and closes each block through one of three cases (at most 3/2m; the
/// offending weight alone; in (3/2m, 2/m], marked when composite); phase 2
/// splits the heaviest marked blocks first, shedding their last weight, and
/// falls back to the linear solver's rule if marked blocks run out. The
/// result is within sqrt(3)/(e ln 2) ~ 0.9193 bits of the optimum.
GreedyOutput greedy2(const ProbabilityVector& p, std::size_t m);

/// Proven worst-case additive entropy gaps of the two greedy solvers,
/// 2/(e ln 2) and sqrt(3)/(e ln 2), evaluated at full double precision.
struct GapBounds {
    double gap1;
    double gap2;
};
GapBounds additive_gap_bounds();

/// Rounded-up gap limits pinned for bound checks in comparisons and tests.
inline constexpr double kGreedy1GapLimitBits = 1.0614757;
inline constexpr double kGreedy2GapLimitBits = 0.9192649;

}  // namespace intervagg
