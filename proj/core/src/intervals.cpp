#include "ietflip/intervals.hpp"

#include <algorithm>

namespace ietflip {

void sort_intervals(IntervalSet& set) {
    std::sort(set.begin(), set.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
}

Scalar total_length(const IntervalSet& set) {
    if (set.empty()) throw EmptyInput("empty interval set");
    Scalar sum(set.front().lo.basis());
    for (const auto& iv : set) sum = sum + iv.length();
    return sum;
}

bool sets_equal(const IntervalSet& a, const IntervalSet& b) {
    if (a.size() != b.size()) return false;
    IntervalSet sa = a, sb = b;
    sort_intervals(sa);
    sort_intervals(sb);
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (!(sa[i] == sb[i])) return false;
    return true;
}

namespace {

// distance from a point to the closure of the union
Scalar point_distance(const Scalar& y, const IntervalSet& x) {
    bool have = false;
    Scalar best(y.basis());
    for (const auto& iv : x) {
        Scalar d(y.basis());
        if (y < iv.lo) d = iv.lo - y;
        else if (y > iv.hi) d = y - iv.hi;
        if (!have || d < best) {
            best = d;
            have = true;
        }
        if (best.is_zero()) break;
    }
    return best;
}

} // namespace

Scalar support_distance(const IntervalSet& x, const IntervalSet& y) {
    if (x.empty() || y.empty()) throw EmptyInput("support_distance on empty set");
    // d(., X) is piecewise linear on Y with kinks at X endpoints and at
    // midpoints of X gaps, so the sup is attained at a Y endpoint or at one
    // of those kinks lying inside Y
    std::vector<Scalar> candidates;
    for (const auto& iv : y) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
    }
    IntervalSet sx = x;
    sort_intervals(sx);
    for (std::size_t i = 0; i + 1 < sx.size(); ++i) {
        if (sx[i].hi < sx[i + 1].lo) {
            Scalar mid = (sx[i].hi + sx[i + 1].lo) / Rat(2);
            for (const auto& iv : y)
                if (iv.contains_closed(mid)) {
                    candidates.push_back(mid);
                    break;
                }
        }
    }
    Scalar best(candidates.front().basis());
    for (const auto& c : candidates) {
        Scalar d = point_distance(c, x);
        if (d > best) best = d;
    }
    return best;
}

} // namespace ietflip
