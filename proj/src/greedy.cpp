#include "intervagg/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace intervagg {

namespace {

// Turns the final segment list into a canonical result and fills the
// output-side diagnostics (k_star, A, A1, A2, B).
GreedyOutput finish(const ProbabilityVector& p, std::vector<SegmentRecord> segments,
                    GreedyDiagnostics diag, std::size_t m, Algorithm tag) {
    std::sort(segments.begin(), segments.end(),
              [](const SegmentRecord& a, const SegmentRecord& b) { return a.start < b.start; });
    assert(segments.size() == m);

    std::vector<std::size_t> bounds;
    bounds.reserve(segments.size() - 1);
    for (std::size_t t = 0; t + 1 < segments.size(); ++t) {
        bounds.push_back(segments[t].end);
    }
    ContiguousPartition partition(p.size(), std::move(bounds));
    ProbabilityVector q = aggregate(p, partition);

    const double two_over_m = 2.0 / static_cast<double>(m);
    double heavy_mass = 0.0;
    double heavy_entropy = 0.0;
    for (double qj : q) {
        if (qj > two_over_m) {
            ++diag.k_star;
            heavy_mass += qj;
            heavy_entropy -= qj * std::log2(qj);
        }
    }
    diag.A = 1.0 - heavy_mass;
    diag.B = heavy_entropy;
    double unsplit_marked = 0.0;
    for (const SegmentRecord& seg : segments) {
        if (seg.marked) {
            unsplit_marked += seg.mass;
        }
    }
    diag.A1 = unsplit_marked;
    diag.A2 = diag.A - unsplit_marked;
    diag.segments = std::move(segments);

    const double h = entropy(q);
    return {AggregationResult{std::move(partition), std::move(q), h, tag}, std::move(diag)};
}

// m = 1 and m = n need no packing; both algorithms return these directly.
GreedyOutput trivial_split(const ProbabilityVector& p, std::size_t m, Algorithm tag) {
    const PrefixSums s(p);
    const std::size_t n = p.size();
    std::vector<SegmentRecord> segments;
    if (m == 1) {
        segments.push_back({1, n, s.block_mass(1, n), false});
    } else {
        segments.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) {
            segments.push_back({j, j, s.block_mass(j, j), false});
        }
    }
    GreedyDiagnostics diag;
    diag.phase1_components = segments.size();
    diag.phase1_segments = segments;
    return finish(p, std::move(segments), std::move(diag), m, tag);
}

// Peels the first weight of the leftmost composite block into a fresh
// singleton, `splits` times. `segments` must be in left-to-right order up to
// any entries this loop itself appends (appended blocks are singletons and
// are skipped anyway).
void split_leftmost_composites(std::vector<SegmentRecord>& segments, const PrefixSums& s,
                               std::size_t splits) {
    std::size_t scan = 0;
    while (splits > 0) {
        while (scan < segments.size() && !segments[scan].composite()) {
            ++scan;
        }
        assert(scan < segments.size());
        const std::size_t first = segments[scan].start;
        segments[scan].start = first + 1;
        segments[scan].mass = s.block_mass(first + 1, segments[scan].end);
        segments.push_back({first, first, s.block_mass(first, first), false});
        --splits;
    }
}

}  // namespace

GreedyOutput greedy1(const ProbabilityVector& p, std::size_t m) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    if (m == 1 || m == n) {
        return trivial_split(p, m, Algorithm::greedy1);
    }
    const PrefixSums s(p);
    const double two_over_m = 2.0 / static_cast<double>(m);

    // Phase 1: pack while the block plus the next weight stays within 2/m.
    // The end-of-input check stands in for the 3/m terminator, which can
    // never pass the bound.
    std::vector<SegmentRecord> segments;
    std::size_t j = 1;
    while (j <= n) {
        const std::size_t start = j;
        while (j < n && s.block_mass(start, j + 1) <= two_over_m) {
            ++j;
        }
        segments.push_back({start, j, s.block_mass(start, j), false});
        ++j;
    }
    assert(segments.size() <= m);

    GreedyDiagnostics diag;
    diag.phase1_components = segments.size();
    diag.phase1_segments = segments;
    diag.splits_performed = m - segments.size();

    split_leftmost_composites(segments, s, diag.splits_performed);
    return finish(p, std::move(segments), std::move(diag), m, Algorithm::greedy1);
}

GreedyOutput greedy2(const ProbabilityVector& p, std::size_t m) {
    const std::size_t n = p.size();
    if (m < 1 || m > n) {
        throw InvalidMError(m, n);
    }
    if (m == 1 || m == n) {
        return trivial_split(p, m, Algorithm::greedy2);
    }
    const PrefixSums s(p);
    const double one_over_m = 1.0 / static_cast<double>(m);
    const double case1_cap = 1.5 / static_cast<double>(m);
    const double case2_floor = 2.0 / static_cast<double>(m);

    std::vector<SegmentRecord> segments;
    std::vector<std::size_t> marked;
    GreedyDiagnostics diag;

    // Phase 1: accumulate while the block stays within 1/m, then close it.
    // The end-of-input check replaces the oversized terminator weight.
    std::size_t j = 1;
    while (j <= n) {
        const std::size_t start = j;
        while (j <= n && s.block_mass(start, j) <= one_over_m) {
            ++j;
        }
        if (j > n) {
            // Leftover tail, mass at most 1/m.
            segments.push_back({start, n, s.block_mass(start, n), false});
            break;
        }
        const double total = s.block_mass(start, j);  // accumulated block plus w_j, above 1/m
        const bool has_prefix = j > start;
        if (total <= case1_cap) {
            // Case 1: absorb w_j; the block lands in (1/m, 3/2m].
            segments.push_back({start, j, total, false});
            ++diag.k1;
        } else if (total > case2_floor) {
            // Case 2: close the sub-1/m prefix (if any), then w_j alone. The
            // singleton may exceed 3/2m but is never splittable.
            if (has_prefix) {
                segments.push_back({start, j - 1, s.block_mass(start, j - 1), false});
                ++diag.k2;
            }
            segments.push_back({j, j, s.block_mass(j, j), false});
            ++diag.k2;
        } else {
            // Case 3: the block lands in (3/2m, 2/m]; mark it when composite
            // so phase 2 can split it.
            const bool mark = has_prefix;
            if (mark) {
                marked.push_back(segments.size());
            }
            segments.push_back({start, j, total, mark});
            ++diag.k3;
        }
        ++j;
    }
    assert(segments.size() <= m);
    diag.phase1_components = segments.size();
    diag.phase1_segments = segments;
    std::size_t splits = m - segments.size();
    diag.splits_performed = splits;

    // Phase 2: shed the last weight of the heaviest marked blocks first.
    // Ties go to the earlier block for determinism.
    std::sort(marked.begin(), marked.end(), [&](std::size_t a, std::size_t b) {
        if (segments[a].mass != segments[b].mass) {
            return segments[a].mass > segments[b].mass;
        }
        return segments[a].start < segments[b].start;
    });
    for (std::size_t idx : marked) {
        if (splits == 0) {
            break;
        }
        const std::size_t last = segments[idx].end;
        segments[idx].end = last - 1;
        segments[idx].mass = s.block_mass(segments[idx].start, last - 1);
        segments[idx].marked = false;
        segments.push_back({last, last, s.block_mass(last, last), false});
        --splits;
    }

    if (splits > 0) {
        // Marked blocks exhausted; fall back to the linear solver's rule on
        // the remaining composite blocks, leftmost first.
        std::sort(segments.begin(), segments.end(),
                  [](const SegmentRecord& a, const SegmentRecord& b) { return a.start < b.start; });
        split_leftmost_composites(segments, s, splits);
    }
    return finish(p, std::move(segments), std::move(diag), m, Algorithm::greedy2);
}

GapBounds additive_gap_bounds() {
    const double e_ln2 = std::exp(1.0) * std::log(2.0);
    return {2.0 / e_ln2, std::sqrt(3.0) / e_ln2};
}

}  // namespace intervagg
