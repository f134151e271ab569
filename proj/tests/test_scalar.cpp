#include <doctest.h>

#include <gmpxx.h>

#include "ietflip/rng.hpp"
#include "ietflip/scalar.hpp"

using namespace ietflip;

namespace {

const BasisPtr B23 = make_basis({2, 3});

Scalar sc(long a, long b = 0, long c = 0, long d = 0) {
    // a + b*sqrt2 + c*sqrt3 + d*sqrt6
    Scalar s(B23, a);
    s = s + Scalar::term(B23, 1, Rat(b));
    s = s + Scalar::term(B23, 2, Rat(c));
    s = s + Scalar::term(B23, 3, Rat(d));
    return s;
}

Scalar random_scalar(Rng& rng) {
    Scalar s(B23);
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
        Rat q = make_rat(rng.uniform(-30, 30), rng.uniform(1, 12));
        s = s + Scalar::term(B23, mask, q);
    }
    return s;
}

// independent high-precision evaluation via mpf at ~60 decimal digits
mpf_class mpf_eval(const Scalar& s) {
    mpf_class acc(0, 256);
    for (const auto& [mask, q] : s.coeffs()) {
        mpf_class root(s.basis()->subset_product(mask), 256);
        root = sqrt(root);
        mpf_class coeff(q, 256);
        acc += coeff * root;
    }
    return acc;
}

} // namespace

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(make_basis({4}), OutOfRange);       // not square-free
    CHECK_THROWS_AS(make_basis({2, 2}), OutOfRange);    // repeated
    CHECK_THROWS_AS(make_basis({3, 2}), OutOfRange);    // not ascending
    CHECK_THROWS_AS(make_basis({1}), OutOfRange);
    CHECK(make_basis({2, 3, 5})->mask_count() == 8);
    CHECK(make_basis({2, 3})->subset_product(3) == 6);
}

TEST_CASE("arithmetic cancellation") {
    // (1 + sqrt2) + (2 - sqrt2) = 3
    Scalar a = sc(1, 1), b = sc(2, -1);
    Scalar sum = a + b;
    CHECK(sum.is_rational());
    CHECK(sum.rational_part() == 3);

    // sqrt2 * sqrt2 = 2
    Scalar r2 = sc(0, 1);
    CHECK((r2 * r2) == sc(2));

    // (1+sqrt2)(1+sqrt3) = 1 + sqrt2 + sqrt3 + sqrt6
    CHECK((sc(1, 1) * sc(1, 0, 1)) == sc(1, 1, 1, 1));
}

TEST_CASE("mixed-basis arithmetic is rejected") {
    Scalar a(make_basis({2}), 1);
    Scalar b(make_basis({3}), 1);
    CHECK_THROWS_AS(a + b, BasisMismatch);
}

TEST_CASE("sign") {
    CHECK(Scalar(B23).sign() == 0);
    CHECK(sc(-1, 1).sign() == 1);              // sqrt2 - 1 > 0
    // 3*sqrt2 - 2*sqrt3 - 1/2 > 0
    Scalar s = Scalar::term(B23, 1, Rat(3)) + Scalar::term(B23, 2, Rat(-2)) +
               Scalar(B23, make_rat(-1, 2));
    CHECK(s.sign() == 1);
    CHECK((-s).sign() == -1);
    // engineered cancellation to exact zero
    Scalar z = sc(1, 1) - sc(0, 1) - sc(1);
    CHECK(z.sign() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("sign agrees with high-precision evaluation away from zero") {
    Rng rng(11);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        Scalar s = random_scalar(rng);
        mpf_class v = mpf_eval(s);
        mpf_class bound(1, 256);
        bound /= mpf_class("100000000000000000000");   // 1e-20
        if (abs(v) <= bound) continue;
        ++checked;
        CHECK(s.sign() == (v > 0 ? 1 : -1));
    }
    CHECK(checked > 450);
}

TEST_CASE("sign separates tiny engineered differences") {
    // Convergents p/q of sqrt2 from the Pell recurrence; the later ones sit
    // within 1e-30 of sqrt2, far below the double filter's resolution, and
    // sign(sqrt2 - p/q) = sign(2q^2 - p^2) gives an exact oracle.
    Int p = 3, q = 2;
    const Scalar r2 = sc(0, 1);
    for (int step = 0; step < 20; ++step) {
        Int np = p + 2 * q, nq = p + q;
        p = np;
        q = nq;
        Scalar diff = r2 - Scalar(B23, make_rat(p, q));
        CHECK(diff.sign() == sgn(Int(2 * q * q - p * p)));
    }
}

TEST_CASE("is_rational") {
    CHECK(Scalar(B23, make_rat(7, 3)).is_rational());
    CHECK_FALSE(sc(0, 1).is_rational());
    CHECK((sc(1, 1) - sc(0, 1)).is_rational());
}

TEST_CASE("field axioms on random samples") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar(B23));
        Rat q = make_rat(rng.uniform(1, 40), rng.uniform(1, 9));
        CHECK((a * q) / q == a);
        CHECK(a + Scalar(B23) == a);
        CHECK(a * Scalar(B23, 1) == a);
    }
}

TEST_CASE("comparison operators are consistent with difference sign") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        const int s = (a - b).sign();
        CHECK((a < b) == (s < 0));
        CHECK((a > b) == (s > 0));
        CHECK((a == b) == (s == 0));
    }
}

TEST_CASE("abs and str") {
    CHECK(abs(sc(-1, -1)).sign() == 1);
    CHECK(Scalar(B23).str() == "0");
    CHECK(sc(2).str() == "2");
    CHECK(sc(0, 1).str() == "sqrt(2)");
}
