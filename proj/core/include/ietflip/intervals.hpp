#pragma once

#include <vector>

#include "ietflip/scalar.hpp"

namespace ietflip {

// Open interval (lo, hi) with exact endpoints, lo < hi.
struct Interval {
    Scalar lo;
    Scalar hi;

    Scalar length() const { return hi - lo; }
    Scalar midpoint() const { return (lo + hi) / Rat(2); }
    bool contains(const Scalar& x) const { return lo < x && x < hi; }
    bool contains_closed(const Scalar& x) const { return lo <= x && x <= hi; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// Finite unions of disjoint open intervals, kept sorted by left endpoint.
// Adjacent pieces may share an endpoint; pieces are never merged implicitly
// because component supports carry meaning in their piece structure.
using IntervalSet = std::vector<Interval>;

void sort_intervals(IntervalSet& set);
Scalar total_length(const IntervalSet& set);
bool sets_equal(const IntervalSet& a, const IntervalSet& b);

// one-sided Hausdorff distance: sup over y in Y of dist(y, X)
Scalar support_distance(const IntervalSet& x, const IntervalSet& y);

} // namespace ietflip
