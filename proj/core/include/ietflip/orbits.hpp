#pragma once

#include <optional>
#include <vector>

#include "ietflip/iet.hpp"
#include "ietflip/intervals.hpp"

namespace ietflip {

struct OrbitResult {
    std::vector<Scalar> points;   // x, T(x), ..., up to steps iterates
    bool halted = false;          // stopped early on a breakpoint
};

// exact orbit; stops (with halted = true) when an iterate lands on a
// breakpoint of the requested direction
OrbitResult orbit(const Iet& t, const Scalar& x, int steps, Iet::Dir dir = Iet::Dir::Fwd);

// Orbit continuation of a singular point or endpoint: starts at x_j, proceeds
// to the one-sided limit w_j^side, then iterates T until it meets a
// breakpoint again. Recorded when the meeting happens within `cap` steps.
struct SaddleConnection {
    int start_index;              // j in 0..n
    int start_side;               // +1 / -1
    int end_index;                // r in 0..n
    std::vector<Scalar> itinerary;   // x_j, w_j, T(w_j), ..., x_r
    int length() const { return static_cast<int>(itinerary.size()) - 1; }
};

std::vector<SaddleConnection> saddle_connections(const Iet& t, int cap);
// the scan restricted to one one-sided start
std::optional<SaddleConnection> saddle_connection_from(const Iet& t, int j, int side,
                                                       int cap);

// true when some connection ends at an interior singular point; such a block
// cannot be certified minimal
bool has_interior_connection(const std::vector<SaddleConnection>& conns, int n);

struct RigidPartition {
    int depth;
    IntervalSet cells;
};

// cells cut at every backward image T^{-t}(x_i), 0 <= t <= depth, of the
// interior singular points; each cell is rigid to that depth
RigidPartition rigid_partition(const Iet& t, int depth);

struct ChaseCaps {
    int initial_depth = 0;     // rigid-partition depth seeding the oracle
    int max_return = 20000;    // interval-map steps per chase
    int max_splits = 2000;     // on-demand refinement budget
};

// Result of following one candidate rigid interval to its first return.
struct CycleSignature {
    int first_return = 0;        // m with T^m(J) = J
    int orientation = 0;         // derivative sign of T^m on J
    int half_orientation = 0;    // -1 when T^{m/2} reverses on some interval
                                 // of the cycle, +1 otherwise, 0 if m odd
    IntervalSet cycle;           // J, T(J), ..., sorted by position
    // reported period: interval count, doubled when the return reverses
    int period() const { return orientation < 0 ? 2 * first_return : first_return; }
    bool flipped() const {
        return orientation < 0 || (first_return % 2 == 0 && half_orientation < 0);
    }
};

// chase the rigid interval containing w, shrinking to the piece around w
// whenever a forward image straddles a breakpoint
CycleSignature witness_cycle(const Iet& t, const Scalar& w, const ChaseCaps& caps);

// chase a candidate interval known (or hoped) to be exactly rigid
std::optional<CycleSignature> chase_interval(const Iet& t, const Interval& start,
                                             const ChaseCaps& caps);

struct PeriodicComponentInfo {
    IntervalSet support;
    int period;
    bool flipped;
    Scalar witness;
    int first_return;
    int orientation;
};

struct OracleResult {
    std::vector<PeriodicComponentInfo> components;
    IntervalSet unresolved;    // cells that neither returned nor could be split
};

// Brute-force inventory of the periodic part: follow every cell of the rigid
// partition to first return, refining on demand when an image straddles a
// breakpoint. Independent of the induction pipeline by construction.
OracleResult periodic_components_oracle(const Iet& t, const ChaseCaps& caps);

struct SupportEstimate {
    IntervalSet support;        // cells visited within `steps` iterates
    Scalar length_at_half;      // visited length after steps/2
    Scalar length_at_full;
    int depth;
};

// union of rigid-partition cells visited by the forward orbit; an outer
// approximation of the minimal component around x, never a certificate
SupportEstimate minimal_support_estimate(const Iet& t, const Scalar& x, int steps);

} // namespace ietflip
