#include <doctest.h>

#include <algorithm>
#include <utility>

#include "ietflip/orbits.hpp"
#include "ietflip/rauzy.hpp"
#include "ietflip/rng.hpp"

using namespace ietflip;

namespace {

const BasisPtr B23 = make_basis({2, 3});

Scalar rat(long num, long den = 1) { return Scalar(B23, make_rat(num, den)); }
Scalar root2() { return Scalar::term(B23, 1, Rat(1)); }

Iet make(std::vector<Scalar> lens, std::vector<int> perm) {
    return Iet(LengthVector(std::move(lens)), SignedPermutation(std::move(perm)));
}

} // namespace

TEST_CASE("orbit of the 1-interval flip") {
    Iet t = make({rat(1)}, {-1});
    OrbitResult o = orbit(t, rat(1, 3), 4);
    REQUIRE(o.points.size() == 5);
    CHECK(o.points[0] == rat(1, 3));
    CHECK(o.points[1] == rat(2, 3));
    CHECK(o.points[2] == rat(1, 3));
    CHECK(o.points[4] == rat(1, 3));
    CHECK_FALSE(o.halted);

    OrbitResult fixed = orbit(t, rat(1, 2), 4);
    for (const auto& p : fixed.points) CHECK(p == rat(1, 2));
}

TEST_CASE("orbit equals repeated evaluate") {
    Iet t = make({root2(), rat(1)}, {-2, 1});
    OrbitResult o = orbit(t, rat(1, 2), 30);
    Scalar cur = rat(1, 2);
    for (std::size_t k = 1; k < o.points.size(); ++k) {
        auto next = t.evaluate(cur);
        REQUIRE(next.has_value());
        cur = *next;
        CHECK(cur == o.points[k]);
    }
    // backward orbit inverts the forward one
    OrbitResult back = orbit(t, o.points.back(), 5, Iet::Dir::Bwd);
    CHECK(back.points[1] == o.points[o.points.size() - 2]);
}

TEST_CASE("orbit halts on breakpoints and rejects outside points") {
    Iet t = make({rat(1), rat(1)}, {2, 1});
    OrbitResult o = orbit(t, rat(1), 5);
    CHECK(o.halted);
    CHECK(o.points.size() == 1);
    CHECK_THROWS_AS(orbit(t, rat(-1, 2), 3), OutOfRange);
    CHECK_THROWS_AS(orbit(t, rat(2), 3), OutOfRange);
}

TEST_CASE("saddle connections of the 1-interval flip") {
    Iet t = make({rat(1)}, {-1});
    auto conns = saddle_connections(t, 10);
    // starts: w_0^+ = 1 = x_1 and w_1^- = 0 = x_0, both immediate
    REQUIRE(conns.size() == 2);
    for (const auto& c : conns) {
        CHECK(c.length() == 1);
        CHECK((c.end_index == 0 || c.end_index == 1));
    }
}

TEST_CASE("every IET scan finds the two trivial connections") {
    Rng rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        std::vector<Scalar> lens;
        for (int i = 0; i < n; ++i)
            lens.push_back(rat(rng.uniform(1, 9)) +
                           Scalar::term(B23, 1, make_rat(rng.uniform(1, 9), 7)));
        std::vector<int> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(vals[i], vals[rng.uniform(0, i)]);
        for (int i = 0; i < n; ++i)
            if (rng.coin()) vals[i] = -vals[i];
        Iet t{LengthVector(lens), SignedPermutation(vals)};
        auto conns = saddle_connections(t, 64);
        CHECK(conns.size() >= 2);
        int ends_at_boundary = 0;
        for (const auto& c : conns)
            if (c.end_index == 0 || c.end_index == t.n()) ++ends_at_boundary;
        CHECK(ends_at_boundary >= 2);
        // minimality: itineraries meet the breakpoint set only at their ends
        for (const auto& c : conns) {
            for (std::size_t k = 1; k + 1 < c.itinerary.size(); ++k) {
                for (int r = 0; r <= t.n(); ++r)
                    CHECK(Scalar::cmp(c.itinerary[k], t.breakpoint(r)) != 0);
            }
        }
    }
}

TEST_CASE("oriented irrational rotation has only trivial connections") {
    Iet t = make({rat(1), root2()}, {2, 1});
    auto conns = saddle_connections(t, 50);
    CHECK(conns.size() == 2);
    CHECK_FALSE(has_interior_connection(conns, t.n()));
}

TEST_CASE("rational rotation has an interior connection") {
    Iet t = make({rat(1), rat(1)}, {2, 1});
    auto conns = saddle_connections(t, 10);
    CHECK(has_interior_connection(conns, t.n()));
}

TEST_CASE("rigid partition") {
    Iet flip = make({rat(1)}, {-1});
    for (int depth : {0, 1, 5}) {
        RigidPartition part = rigid_partition(flip, depth);
        REQUIRE(part.cells.size() == 1);   // a 1-IET has no interior singular points
        CHECK(part.cells[0] == Interval{rat(0), rat(1)});
    }

    Iet t = make({root2(), rat(1)}, {-2, 1});
    RigidPartition d0 = rigid_partition(t, 0);
    REQUIRE(d0.cells.size() == 2);
    CHECK(d0.cells[0].hi == root2());

    // T^{-1}(sqrt2) = 1, so depth 1 cuts at 1 and sqrt2
    RigidPartition d1 = rigid_partition(t, 1);
    REQUIRE(d1.cells.size() == 3);
    CHECK(d1.cells[0] == Interval{rat(0), rat(1)});
    CHECK(d1.cells[1] == Interval{rat(1), root2()});
    CHECK(d1.cells[2] == Interval{root2(), rat(1) + root2()});
}

TEST_CASE("oracle on the 1-interval flip") {
    Iet t = make({rat(1)}, {-1});
    OracleResult o = periodic_components_oracle(t, {});
    REQUIRE(o.components.size() == 1);
    CHECK(o.components[0].period == 2);       // reversing return of (0,1)
    CHECK(o.components[0].flipped);
    CHECK(o.components[0].first_return == 1);
    CHECK(o.components[0].support.size() == 1);
    CHECK(o.unresolved.empty());
}

TEST_CASE("oracle on the sqrt2 flip example") {
    Iet t = make({root2(), rat(1)}, {-2, 1});
    OracleResult o = periodic_components_oracle(t, {});
    REQUIRE(o.components.size() == 2);
    CHECK(o.unresolved.empty());
    std::vector<int> periods;
    for (const auto& c : o.components) {
        periods.push_back(c.period);
        CHECK(c.flipped);
    }
    std::sort(periods.begin(), periods.end());
    CHECK(periods == std::vector<int>{2, 4});
    // supports: {(1, sqrt2)} and {(0,1), (sqrt2, 1+sqrt2)}
    Scalar c_total = rat(1) + root2();
    for (const auto& comp : o.components) {
        if (comp.period == 2) {
            REQUIRE(comp.support.size() == 1);
            CHECK(comp.support[0] == Interval{rat(1), root2()});
        } else {
            REQUIRE(comp.support.size() == 2);
            CHECK(comp.support[0] == Interval{rat(0), rat(1)});
            CHECK(comp.support[1] == Interval{root2(), c_total});
        }
    }
}

TEST_CASE("oracle marks minimal regions unresolved") {
    Iet t = make({rat(1), root2()}, {2, 1});   // minimal rotation
    ChaseCaps caps;
    caps.max_return = 500;
    caps.max_splits = 40;
    OracleResult o = periodic_components_oracle(t, caps);
    CHECK(o.components.empty());
    CHECK_FALSE(o.unresolved.empty());
}

TEST_CASE("witness cycle signatures") {
    // swap of equal halves: period 2, orientation preserved throughout
    Iet t = make({rat(1), rat(1)}, {2, 1});
    CycleSignature sig = witness_cycle(t, rat(1, 3), {});
    CHECK(sig.first_return == 2);
    CHECK(sig.orientation == 1);
    CHECK(sig.half_orientation == 1);
    CHECK(sig.period() == 2);
    CHECK_FALSE(sig.flipped());
    REQUIRE(sig.cycle.size() == 2);

    // the reflection x -> 3-x written as two flipped intervals: the outer
    // cells return with a reversing half turn, the centered cell reverses
    // in one step
    Iet r = make({rat(1), rat(2)}, {-2, -1});
    CycleSignature sr = witness_cycle(r, rat(1, 3), {});
    CHECK(sr.first_return == 2);
    CHECK(sr.orientation == 1);
    CHECK(sr.half_orientation == -1);
    CHECK(sr.flipped());
    CHECK(sets_equal(sr.cycle, {{rat(0), rat(1)}, {rat(2), rat(3)}}));
    CycleSignature sc = witness_cycle(r, rat(3, 2), {});
    CHECK(sc.first_return == 1);
    CHECK(sc.orientation == -1);
    CHECK(sc.period() == 2);
    CHECK(sc.flipped());
    CHECK(sets_equal(sc.cycle, {{rat(1), rat(2)}}));
}

TEST_CASE("witness cycle error paths") {
    Iet t = make({rat(1), root2()}, {2, 1});   // minimal: no return
    ChaseCaps caps;
    caps.max_return = 200;
    caps.max_splits = 20;
    CHECK_THROWS_AS(witness_cycle(t, rat(1, 3), caps), CapExceeded);
    Iet s = make({rat(1), rat(1)}, {2, 1});
    CHECK_THROWS_AS(witness_cycle(s, rat(1), {}), OrbitHalted);
}

TEST_CASE("minimal support estimate converges on a rotation") {
    Iet t = make({rat(1), root2()}, {2, 1});
    SupportEstimate est = minimal_support_estimate(t, rat(1, 3), 400);
    // visited cells eventually cover the whole interval
    CHECK(Scalar::cmp(est.length_at_full * Rat(100), t.total() * Rat(95)) > 0);
    CHECK(Scalar::cmp(est.length_at_half, est.length_at_full) <= 0);
    CHECK(est.depth == 400);
}

TEST_CASE("support estimate rejects halting orbits") {
    Iet t = make({rat(1), rat(1)}, {2, 1});
    CHECK_THROWS_AS(minimal_support_estimate(t, rat(1), 10), OrbitHalted);
}

TEST_CASE("support distance") {
    IntervalSet x{{rat(0), rat(1)}};
    IntervalSet y{{rat(0), rat(2)}};
    CHECK(support_distance(x, x) == rat(0));
    CHECK(support_distance(x, y) == rat(1));
    CHECK(support_distance(y, x) == rat(0));
    CHECK_THROWS_AS(support_distance({}, x), EmptyInput);

    // gap midpoint dominates: X = (0,1) u (3,4), Y = (0,4)
    IntervalSet x2{{rat(0), rat(1)}, {rat(3), rat(4)}};
    IntervalSet y2{{rat(0), rat(4)}};
    CHECK(support_distance(x2, y2) == rat(1));
    CHECK(support_distance(y2, x2) == rat(0));
}

TEST_CASE("first return agreement between induction and direct orbits") {
    Rng rng(1234);
    int instances = 0;
    while (instances < 12) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        std::vector<int> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(vals[i], vals[rng.uniform(0, i)]);
        for (int i = 0; i < n; ++i)
            if (rng.coin()) vals[i] = -vals[i];
        SignedPermutation p(vals);
        if (!p.in_p_star()) continue;
        std::vector<Scalar> lens;
        for (int i = 0; i < n; ++i)
            lens.push_back(rat(rng.uniform(1, 9), rng.uniform(1, 9)) +
                           Scalar::term(B23, 1, make_rat(rng.uniform(1, 9), rng.uniform(1, 9))));
        LengthVector lambda(lens);
        if (rauzy_type(lambda, p) == RauzyClass::Tie) continue;
        ++instances;
        RauzyStep step = rauzy_step(lambda, p);
        Iet t(lambda, p);
        Iet induced(step.lambda, step.p);
        const Scalar& xi = step.record.xi;
        for (int s = 1; s <= 12; ++s) {
            Scalar x = xi * make_rat(s, 13);
            if (t.locate(x) == 0 || induced.locate(x) == 0) continue;
            // direct first return into (0, xi); one excursion at most
            auto y = t.evaluate(x);
            REQUIRE(y.has_value());
            int sign = t.perm().theta(t.locate(x));
            if (Scalar::cmp(*y, xi) >= 0) {
                const int i2 = t.locate(*y);
                if (i2 == 0) continue;
                sign *= t.perm().theta(i2);
                y = t.evaluate(*y);
                REQUIRE(y.has_value());
                CHECK(Scalar::cmp(*y, xi) < 0);
            }
            auto via_induction = induced.evaluate(x);
            REQUIRE(via_induction.has_value());
            CHECK(*via_induction == *y);
            CHECK(induced.perm().theta(induced.locate(x)) == sign);
        }
    }
}
