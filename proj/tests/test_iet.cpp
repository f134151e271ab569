#include <doctest.h>

#include <utility>

#include "ietflip/iet.hpp"
#include "ietflip/rng.hpp"

using namespace ietflip;

namespace {

const BasisPtr B23 = make_basis({2, 3});

Scalar rat(long num, long den = 1) { return Scalar(B23, make_rat(num, den)); }
Scalar root2() { return Scalar::term(B23, 1, Rat(1)); }

Iet make(std::vector<Scalar> lens, std::vector<int> perm) {
    return build_iet(LengthVector(std::move(lens)), SignedPermutation(std::move(perm)));
}

Iet random_iet(Rng& rng, int n) {
    std::vector<Scalar> lens;
    for (int i = 0; i < n; ++i) {
        Scalar l = rat(rng.uniform(1, 20), rng.uniform(1, 20)) +
                   Scalar::term(B23, 1, make_rat(rng.uniform(1, 20), rng.uniform(1, 20))) +
                   Scalar::term(B23, 2, make_rat(rng.uniform(1, 20), rng.uniform(1, 20)));
        lens.push_back(l);
    }
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(vals[i], vals[rng.uniform(0, i)]);
    for (int i = 0; i < n; ++i)
        if (rng.coin()) vals[i] = -vals[i];
    return make(std::move(lens), std::move(vals));
}

} // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(make({rat(1)}, {1, 2}), DimensionMismatch);
    CHECK_THROWS_AS(make({rat(0)}, {1}), NonPositiveLength);
    CHECK_THROWS_AS(make({rat(-1)}, {-1}), NonPositiveLength);
    CHECK_THROWS_AS(SignedPermutation({1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(SignedPermutation({0}), DimensionMismatch);
    CHECK_THROWS_AS(SignedPermutation({3}), DimensionMismatch);
}

TEST_CASE("single flipped interval is x -> 1-x") {
    Iet t = make({rat(1)}, {-1});
    CHECK(*t.evaluate(rat(1, 4)) == rat(3, 4));
    CHECK(*t.evaluate(rat(1, 2)) == rat(1, 2));   // fixed point
    auto ffp = t.flipped_fixed_points();
    REQUIRE(ffp.size() == 1);
    CHECK(ffp[0].first == 1);
    CHECK(ffp[0].second == rat(1, 2));
}

TEST_CASE("swap of two unit intervals") {
    Iet t = make({rat(1), rat(1)}, {2, 1});
    CHECK(*t.evaluate(rat(1, 2)) == rat(3, 2));
    CHECK(*t.evaluate(rat(3, 2)) == rat(1, 2));
    CHECK_FALSE(t.evaluate(rat(1)).has_value());   // singular point
    CHECK(t.flipped_fixed_points().empty());
}

TEST_CASE("flipped sqrt2 example") {
    // lengths (sqrt2, 1), permutation (-2, 1):
    // T(x) = (1+sqrt2) - x on (0, sqrt2), T(x) = x - sqrt2 on (sqrt2, 1+sqrt2)
    Iet t = make({root2(), rat(1)}, {-2, 1});
    Scalar c = rat(1) + root2();
    CHECK(t.total() == c);
    CHECK(*t.evaluate(rat(1)) == c - rat(1));
    CHECK(*t.evaluate(rat(1)) == root2());
    // image endpoints with orientation reversed on the flipped interval
    CHECK(t.map_interval({rat(0), root2()}, 1) == Interval{rat(1), c});
    CHECK(t.map_interval({root2(), c}, 2) == Interval{rat(0), rat(1)});
    // backward direction undefined on image breakpoints
    CHECK_FALSE(t.evaluate(rat(1), Iet::Dir::Bwd).has_value());
    CHECK(t.evaluate(rat(1), Iet::Dir::Fwd).has_value());
}

TEST_CASE("evaluate range checking") {
    Iet t = make({rat(1)}, {1});
    CHECK_THROWS_AS(t.evaluate(rat(-1)), OutOfRange);
    CHECK_THROWS_AS(t.evaluate(rat(2)), OutOfRange);
    CHECK_FALSE(t.evaluate(rat(0)).has_value());
    CHECK_FALSE(t.evaluate(rat(1)).has_value());
}

TEST_CASE("flipped fixed point with dominant interval") {
    // lengths (3,1), p = (-1,-2): interval 1 flipped, 3 > norm/2, fixed point 3/2
    Iet t = make({rat(3), rat(1)}, {-1, -2});
    auto ffp = t.flipped_fixed_points();
    REQUIRE(!ffp.empty());
    CHECK(ffp[0].first == 1);
    CHECK(ffp[0].second == rat(3, 2));
    CHECK(*t.evaluate(rat(3, 2)) == rat(3, 2));
}

TEST_CASE("dominant flipped interval always has a fixed point") {
    // whenever theta_i = -1 and lambda_i > norm/2 an in-interval solution exists
    Rng rng(23);
    int hits = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 5));
        Iet t = random_iet(rng, n);
        for (int i = 1; i <= n; ++i) {
            if (t.perm().theta(i) > 0) continue;
            if (Scalar::cmp(t.lengths().at(i) * Rat(2), t.lengths().norm()) <= 0) continue;
            ++hits;
            bool found = false;
            for (const auto& [idx, fp] : t.flipped_fixed_points()) {
                if (idx == i) {
                    found = true;
                    CHECK(*t.evaluate(fp) == fp);
                }
            }
            CHECK(found);
        }
    }
    CHECK(hits > 20);
}

TEST_CASE("round trip and unit derivative properties") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        Iet t = random_iet(rng, n);
        for (int s = 0; s < 10; ++s) {
            Scalar x = t.total() * make_rat(rng.uniform(1, 999), 1000);
            if (t.locate(x) == 0) continue;
            auto y = t.evaluate(x);
            REQUIRE(y.has_value());
            auto back = t.evaluate(*y, Iet::Dir::Bwd);
            REQUIRE(back.has_value());
            CHECK(*back == x);
            // |T'| = 1 inside a subinterval
            const int i = t.locate(x);
            Scalar u = (x + t.breakpoint(i - 1)) / Rat(2);
            if (t.locate(u) == i && !(u == x)) {
                auto yu = t.evaluate(u);
                REQUIRE(yu.has_value());
                CHECK(abs(*y - *yu) == abs(x - u));
            }
        }
    }
}

TEST_CASE("image intervals tile the domain") {
    Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 6));
        Iet t = random_iet(rng, n);
        // y_n = c and slots are consecutive by construction; total image length = c
        Scalar sum(t.basis());
        for (int j = 1; j <= n; ++j) sum = sum + t.image_interval(j).length();
        CHECK(sum == t.total());
        CHECK(t.image_breakpoint(n) == t.total());
        // each domain interval maps onto its image slot
        for (int i = 1; i <= n; ++i) {
            Interval img = t.map_interval(t.domain_interval(i), i);
            CHECK(img == t.image_interval(t.perm().pi(i)));
        }
    }
}

TEST_CASE("one sided limits") {
    Iet t = make({root2(), rat(1)}, {-2, 1});
    // right limit at 0 enters the flipped interval: upper edge of slot 2
    CHECK(t.one_sided_limit(0, +1) == t.total());
    CHECK(t.one_sided_limit(1, -1) == rat(1));            // left limit at sqrt2
    CHECK(t.one_sided_limit(1, +1) == rat(0));            // right limit at sqrt2
    CHECK(t.one_sided_limit(2, -1) == rat(1));
    CHECK(t.one_sided_limits().size() == 4);
}
