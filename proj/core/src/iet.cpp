#include "ietflip/iet.hpp"

namespace ietflip {

LengthVector::LengthVector(std::vector<Scalar> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw DimensionMismatch("empty length vector");
    Scalar sum(lambda_.front().basis());
    for (const auto& l : lambda_) {
        if (l.sign() <= 0) throw NonPositiveLength("length entries must be positive");
        sum = sum + l;
    }
    norm_ = sum;
}

Iet::Iet(LengthVector lambda, SignedPermutation p)
    : lambda_(std::move(lambda)), p_(std::move(p)) {
    const int n = p_.n();
    if (lambda_.n() != n)
        throw DimensionMismatch("length vector and permutation sizes differ");
    x_.reserve(n + 1);
    x_.push_back(Scalar(lambda_.basis()));
    for (int i = 1; i <= n; ++i) x_.push_back(x_.back() + lambda_.at(i));
    y_.reserve(n + 1);
    y_.push_back(Scalar(lambda_.basis()));
    for (int j = 1; j <= n; ++j) y_.push_back(y_.back() + lambda_.at(p_.pi_inverse(j)));
}

int Iet::locate(const Scalar& x) const {
    if (x.sign() < 0 || x > total()) throw OutOfRange("point outside [0, c]");
    for (int i = 1; i <= n(); ++i) {
        const int c = Scalar::cmp(x, x_[i]);
        if (c < 0) return Scalar::cmp(x, x_[i - 1]) > 0 ? i : 0;
        if (c == 0) return 0;
    }
    return 0;
}

int Iet::locate_image(const Scalar& x) const {
    if (x.sign() < 0 || x > total()) throw OutOfRange("point outside [0, c]");
    for (int j = 1; j <= n(); ++j) {
        const int c = Scalar::cmp(x, y_[j]);
        if (c < 0) return Scalar::cmp(x, y_[j - 1]) > 0 ? j : 0;
        if (c == 0) return 0;
    }
    return 0;
}

std::optional<Scalar> Iet::evaluate(const Scalar& x, Dir dir) const {
    if (dir == Dir::Fwd) {
        const int i = locate(x);
        if (i == 0) return std::nullopt;
        if (p_.theta(i) > 0) return y_[p_.pi(i) - 1] + (x - x_[i - 1]);
        return y_[p_.pi(i)] - (x - x_[i - 1]);
    }
    const int j = locate_image(x);
    if (j == 0) return std::nullopt;
    const int i = p_.pi_inverse(j);
    if (p_.theta(i) > 0) return x_[i - 1] + (x - y_[j - 1]);
    return x_[i - 1] + (y_[j] - x);
}

Interval Iet::map_interval(const Interval& iv, int i) const {
    if (p_.theta(i) > 0) {
        Scalar shift = y_[p_.pi(i) - 1] - x_[i - 1];
        return {iv.lo + shift, iv.hi + shift};
    }
    return {y_[p_.pi(i)] - (iv.hi - x_[i - 1]), y_[p_.pi(i)] - (iv.lo - x_[i - 1])};
}

Interval Iet::map_interval_back(const Interval& iv, int j) const {
    const int i = p_.pi_inverse(j);
    if (p_.theta(i) > 0) {
        Scalar shift = x_[i - 1] - y_[j - 1];
        return {iv.lo + shift, iv.hi + shift};
    }
    return {x_[i - 1] + (y_[j] - iv.hi), x_[i - 1] + (y_[j] - iv.lo)};
}

Scalar Iet::one_sided_limit(int j, int side) const {
    if (side > 0) {
        if (j < 0 || j > n() - 1) throw OutOfRange("right limit needs j in 0..n-1");
        const int i = j + 1;
        return p_.theta(i) > 0 ? y_[p_.pi(i) - 1] : y_[p_.pi(i)];
    }
    if (j < 1 || j > n()) throw OutOfRange("left limit needs j in 1..n");
    const int i = j;
    return p_.theta(i) > 0 ? y_[p_.pi(i)] : y_[p_.pi(i) - 1];
}

std::vector<OneSidedLimitPoint> Iet::one_sided_limits() const {
    std::vector<OneSidedLimitPoint> out;
    out.reserve(2 * n());
    out.push_back({0, +1, one_sided_limit(0, +1)});
    for (int j = 1; j <= n() - 1; ++j) {
        out.push_back({j, +1, one_sided_limit(j, +1)});
        out.push_back({j, -1, one_sided_limit(j, -1)});
    }
    out.push_back({n(), -1, one_sided_limit(n(), -1)});
    return out;
}

std::vector<std::pair<int, Scalar>> Iet::flipped_fixed_points() const {
    // on a flipped interval T(x) = y_{pi(i)} - (x - x_{i-1}), so the unique
    // candidate is the midpoint of x_{i-1} and y_{pi(i)} + x_{i-1} ... solved:
    // x* = (y_{pi(i)} + x_{i-1}) / 2
    std::vector<std::pair<int, Scalar>> out;
    for (int i = 1; i <= n(); ++i) {
        if (p_.theta(i) > 0) continue;
        Scalar fixed = (y_[p_.pi(i)] + x_[i - 1]) / Rat(2);
        if (x_[i - 1] < fixed && fixed < x_[i]) out.emplace_back(i, fixed);
    }
    return out;
}

Iet build_iet(LengthVector lambda, SignedPermutation p) {
    return Iet(std::move(lambda), std::move(p));
}

} // namespace ietflip
