#include "ietflip/orbits.hpp"

#include <algorithm>
#include <deque>

namespace ietflip {

OrbitResult orbit(const Iet& t, const Scalar& x, int steps, Iet::Dir dir) {
    if (x.sign() <= 0 || x >= t.total()) throw OutOfRange("orbit start outside (0, c)");
    OrbitResult out;
    out.points.push_back(x);
    Scalar cur = x;
    for (int k = 0; k < steps; ++k) {
        auto next = t.evaluate(cur, dir);
        if (!next) {
            out.halted = true;
            return out;
        }
        cur = *next;
        out.points.push_back(cur);
    }
    return out;
}

namespace {

// index r with x == x_r, or -1
int breakpoint_index(const Iet& t, const Scalar& x) {
    for (int r = 0; r <= t.n(); ++r)
        if (Scalar::cmp(x, t.breakpoint(r)) == 0) return r;
    return -1;
}

} // namespace

std::optional<SaddleConnection> saddle_connection_from(const Iet& t, int j, int side,
                                                       int cap) {
    if (cap < 0) throw OutOfRange("cap must be >= 0");
    SaddleConnection conn;
    conn.start_index = j;
    conn.start_side = side;
    conn.itinerary.push_back(t.breakpoint(j));
    Scalar cur = t.one_sided_limit(j, side);
    conn.itinerary.push_back(cur);
    for (int k = 0; k <= cap; ++k) {
        const int r = breakpoint_index(t, cur);
        if (r >= 0) {
            conn.end_index = r;
            return conn;
        }
        if (k == cap) break;
        auto next = t.evaluate(cur);
        if (!next) break;   // unreachable: breakpoints were just excluded
        cur = *next;
        conn.itinerary.push_back(cur);
    }
    return std::nullopt;
}

std::vector<SaddleConnection> saddle_connections(const Iet& t, int cap) {
    std::vector<SaddleConnection> out;
    for (const auto& start : t.one_sided_limits())
        if (auto conn = saddle_connection_from(t, start.index, start.side, cap))
            out.push_back(std::move(*conn));
    return out;
}

bool has_interior_connection(const std::vector<SaddleConnection>& conns, int n) {
    for (const auto& c : conns)
        if (c.end_index >= 1 && c.end_index <= n - 1) return true;
    return false;
}

RigidPartition rigid_partition(const Iet& t, int depth) {
    if (depth < 0) throw OutOfRange("depth must be >= 0");
    std::vector<Scalar> cuts;
    std::vector<Scalar> frontier;
    for (int i = 1; i <= t.n() - 1; ++i) frontier.push_back(t.breakpoint(i));
    cuts = frontier;
    for (int d = 0; d < depth; ++d) {
        std::vector<Scalar> prev;
        for (const auto& z : frontier) {
            auto back = t.evaluate(z, Iet::Dir::Bwd);
            if (back) prev.push_back(*back);
        }
        frontier = prev;
        cuts.insert(cuts.end(), frontier.begin(), frontier.end());
        if (frontier.empty()) break;
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const Scalar& a, const Scalar& b) { return a == b; }),
               cuts.end());
    RigidPartition part;
    part.depth = depth;
    Scalar lo(t.basis());
    for (const auto& c : cuts) {
        if (c > lo) part.cells.push_back({lo, c});
        lo = c;
    }
    if (t.total() > lo) part.cells.push_back({lo, t.total()});
    return part;
}

namespace {

struct ChaseOutcome {
    enum Kind { Returned, Hit, Capped } kind;
    // Returned
    int m = 0;
    int orientation = 0;
    int half_orientation = 0;
    IntervalSet cycle;
    // Hit: the preimage of the straddled breakpoint inside the start interval
    Scalar cut;
};

// Follow (u, v) under T until T^m(u,v) = (u,v). The interval must sit inside
// the closure of one domain interval at every step; if an image straddles a
// breakpoint the straddle point is pulled back and reported as a cut.
ChaseOutcome chase(const Iet& t, const Interval& start, int max_return) {
    ChaseOutcome out{ChaseOutcome::Capped, 0, 0, 0, {}, Scalar(t.basis())};
    Interval cur = start;
    std::vector<Interval> history;
    std::vector<int> idx_history;
    std::vector<int> signs;
    for (int m = 1; m <= max_return; ++m) {
        int straddle = -1;
        for (int b = 1; b <= t.n() - 1; ++b) {
            const Scalar& xb = t.breakpoint(b);
            if (xb > cur.lo && xb < cur.hi) {
                straddle = b;
                break;
            }
        }
        int inside = 0;
        if (straddle < 0) {
            for (int i = 1; i <= t.n(); ++i)
                if (Scalar::cmp(cur.lo, t.breakpoint(i - 1)) >= 0 &&
                    Scalar::cmp(cur.hi, t.breakpoint(i)) <= 0) {
                    inside = i;
                    break;
                }
            if (inside == 0) return out;   // degenerate placement, treat as capped
        }
        if (straddle >= 0) {
            // pull the breakpoint back through the recorded steps
            Scalar cut = t.breakpoint(straddle);
            for (int k = static_cast<int>(history.size()) - 1; k >= 0; --k) {
                const Interval& from = history[k];
                const int i = idx_history[k];
                if (t.perm().theta(i) > 0)
                    cut = from.lo + (cut - t.map_interval(from, i).lo);
                else
                    cut = from.lo + (t.map_interval(from, i).hi - cut);
            }
            out.kind = ChaseOutcome::Hit;
            out.cut = cut;
            return out;
        }
        history.push_back(cur);
        idx_history.push_back(inside);
        signs.push_back(t.perm().theta(inside));
        cur = t.map_interval(cur, inside);
        if (cur.lo == start.lo && cur.hi == start.hi) {
            out.kind = ChaseOutcome::Returned;
            out.m = m;
            int orient = 1;
            for (int s : signs) orient *= s;
            out.orientation = orient;
            if (m % 2 == 0) {
                // the half-turn derivative depends on which interval of the
                // cycle serves as base; report -1 when any base reverses
                int window = 1;
                for (int k = 0; k < m / 2; ++k) window *= signs[k];
                int half = window;
                for (int j = 0; j + 1 < m && half > 0; ++j) {
                    window *= signs[j] * signs[(j + m / 2) % m];
                    half = window;
                }
                out.half_orientation = half < 0 ? -1 : 1;
            }
            out.cycle = std::move(history);
            sort_intervals(out.cycle);
            return out;
        }
    }
    return out;
}

} // namespace

std::optional<CycleSignature> chase_interval(const Iet& t, const Interval& start,
                                             const ChaseCaps& caps) {
    ChaseOutcome o = chase(t, start, caps.max_return);
    if (o.kind != ChaseOutcome::Returned) return std::nullopt;
    CycleSignature sig;
    sig.first_return = o.m;
    sig.orientation = o.orientation;
    sig.half_orientation = o.half_orientation;
    sig.cycle = std::move(o.cycle);
    return sig;
}

CycleSignature witness_cycle(const Iet& t, const Scalar& w, const ChaseCaps& caps) {
    const int i0 = t.locate(w);
    if (i0 == 0) throw OrbitHalted("witness sits on a breakpoint");
    Interval cur = t.domain_interval(i0);
    for (int split = 0; split <= caps.max_splits; ++split) {
        ChaseOutcome o = chase(t, cur, caps.max_return);
        if (o.kind == ChaseOutcome::Returned) {
            CycleSignature sig;
            sig.first_return = o.m;
            sig.orientation = o.orientation;
            sig.half_orientation = o.half_orientation;
            sig.cycle = std::move(o.cycle);
            return sig;
        }
        if (o.kind == ChaseOutcome::Capped)
            throw CapExceeded("witness interval did not return within cap");
        const int c = Scalar::cmp(w, o.cut);
        if (c == 0) throw OrbitHalted("witness lies on a singular backward orbit");
        if (c < 0) cur.hi = o.cut;
        else cur.lo = o.cut;
    }
    throw CapExceeded("witness refinement exceeded split budget");
}

OracleResult periodic_components_oracle(const Iet& t, const ChaseCaps& caps) {
    OracleResult out;
    std::deque<Interval> queue;
    for (const auto& cell : rigid_partition(t, caps.initial_depth).cells)
        queue.push_back(cell);
    int splits_left = caps.max_splits;

    auto already_covered = [&](const Interval& cell) {
        for (const auto& comp : out.components)
            for (const auto& piece : comp.support)
                if (Scalar::cmp(piece.lo, cell.lo) <= 0 &&
                    Scalar::cmp(cell.hi, piece.hi) <= 0)
                    return true;
        return false;
    };

    while (!queue.empty()) {
        Interval cell = queue.front();
        queue.pop_front();
        if (already_covered(cell)) continue;
        ChaseOutcome o = chase(t, cell, caps.max_return);
        if (o.kind == ChaseOutcome::Returned) {
            PeriodicComponentInfo info{
                std::move(o.cycle),
                o.orientation < 0 ? 2 * o.m : o.m,
                o.orientation < 0 || (o.m % 2 == 0 && o.half_orientation < 0),
                Scalar(t.basis()),
                o.m,
                o.orientation,
            };
            bool duplicate = false;
            for (const auto& comp : out.components)
                if (sets_equal(comp.support, info.support)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) {
                info.witness = info.support.front().midpoint();
                out.components.push_back(std::move(info));
            }
        } else if (o.kind == ChaseOutcome::Hit) {
            if (splits_left <= 0) {
                out.unresolved.push_back(cell);
                continue;
            }
            --splits_left;
            queue.push_back({cell.lo, o.cut});
            queue.push_back({o.cut, cell.hi});
        } else {
            out.unresolved.push_back(cell);
        }
    }
    sort_intervals(out.unresolved);
    std::sort(out.components.begin(), out.components.end(),
              [](const PeriodicComponentInfo& a, const PeriodicComponentInfo& b) {
                  return a.support.front().lo < b.support.front().lo;
              });
    return out;
}

SupportEstimate minimal_support_estimate(const Iet& t, const Scalar& x, int steps) {
    OrbitResult orb = orbit(t, x, steps);
    if (orb.halted) throw OrbitHalted("orbit hit a breakpoint during support estimation");
    RigidPartition part = rigid_partition(t, steps);
    const auto& cells = part.cells;
    std::vector<bool> visited_half(cells.size(), false);
    std::vector<bool> visited_full(cells.size(), false);

    auto cell_of = [&](const Scalar& p) -> int {
        int lo = 0, hi = static_cast<int>(cells.size()) - 1;
        while (lo <= hi) {
            const int mid = (lo + hi) / 2;
            if (p < cells[mid].lo) {
                hi = mid - 1;
            } else if (p > cells[mid].hi) {
                lo = mid + 1;
            } else {
                return cells[mid].contains(p) ? mid : -1;
            }
        }
        return -1;
    };

    for (std::size_t k = 0; k < orb.points.size(); ++k) {
        const int c = cell_of(orb.points[k]);
        if (c < 0) continue;   // orbit point equals a cut point
        visited_full[c] = true;
        if (k <= orb.points.size() / 2) visited_half[c] = true;
    }

    SupportEstimate est;
    est.depth = steps;
    Scalar half_len(t.basis()), full_len(t.basis());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (visited_full[i]) {
            est.support.push_back(cells[i]);
            full_len = full_len + cells[i].length();
        }
        if (visited_half[i]) half_len = half_len + cells[i].length();
    }
    est.length_at_half = half_len;
    est.length_at_full = full_len;
    return est;
}

} // namespace ietflip
