#pragma once

// Discrepancy of the fractional parts {lambda^{s_n}/p}: exact star and
// extreme discrepancy plus the explicit Erdos-Turan upper bound.

#include <span>
#include <vector>

#include "expsieve/base.hpp"

namespace expsieve::discrepancy {

struct PointSet {
    std::vector<double> points;  // each in [0,1)
};

PointSet fractional_parts(u64 lambda, u64 p, std::span<const u64> s);

// D* = max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted points.
double star_discrepancy(const PointSet& ps);

// sup over half-open [a,b) of |A(a,b)/N - (b-a)|.  The sup is realized as a
// limit at point boundaries, so candidate endpoints carry strict/non-strict
// counting modes instead of epsilon shifts; O(N^2) over candidate pairs.
double extreme_discrepancy(const PointSet& ps);

// 1/(H+1) + 3 sum_{h<=H} (1/h) |S_h|/N with S_h = sum_j e^{2 pi i h x_j}.
double erdos_turan_bound(const PointSet& ps, u64 H);

// floor(sqrt(N)), the default harmonic count for erdos_turan_bound
u64 default_harmonics(std::size_t N);

}  // namespace expsieve::discrepancy
