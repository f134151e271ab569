#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ietflip/intervals.hpp"
#include "ietflip/permutation.hpp"
#include "ietflip/scalar.hpp"

namespace ietflip {

class LengthVector {
  public:
    explicit LengthVector(std::vector<Scalar> lambda);

    int n() const { return static_cast<int>(lambda_.size()); }
    const Scalar& at(int i) const { return lambda_[i - 1]; }   // 1-based
    const std::vector<Scalar>& values() const { return lambda_; }
    const BasisPtr& basis() const { return lambda_.front().basis(); }
    const Scalar& norm() const { return norm_; }

    bool operator==(const LengthVector& o) const { return lambda_ == o.lambda_; }

  private:
    std::vector<Scalar> lambda_;
    Scalar norm_;
};

struct OneSidedLimitPoint {
    int index;     // j in {0..n}
    int side;      // +1 or -1; w_j^+ / w_j^-
    Scalar value;
};

// Exchange of n intervals: T maps (x_{i-1}, x_i) isometrically onto the
// pi(i)-th slot (y_{pi(i)-1}, y_{pi(i)}), reversing orientation where the
// sign is negative. Immutable after construction; all queries are exact.
class Iet {
  public:
    Iet(LengthVector lambda, SignedPermutation p);

    int n() const { return p_.n(); }
    const LengthVector& lengths() const { return lambda_; }
    const SignedPermutation& perm() const { return p_; }
    const Scalar& breakpoint(int i) const { return x_[i]; }        // x_i, i in 0..n
    const Scalar& image_breakpoint(int j) const { return y_[j]; }  // y_j
    const Scalar& total() const { return x_.back(); }              // c
    const BasisPtr& basis() const { return lambda_.basis(); }

    enum class Dir { Fwd, Bwd };

    // T(x) (or T^{-1}(x)); empty exactly when x is a breakpoint of the
    // requested direction. Throws OutOfRange outside [0, c].
    std::optional<Scalar> evaluate(const Scalar& x, Dir dir = Dir::Fwd) const;

    // 1-based index of the open domain interval containing x, 0 when x sits
    // on a breakpoint (including 0 and c)
    int locate(const Scalar& x) const;
    int locate_image(const Scalar& x) const;

    Interval domain_interval(int i) const { return {x_[i - 1], x_[i]}; }
    Interval image_interval(int j) const { return {y_[j - 1], y_[j]}; }

    // image of (u,v) under T given (u,v) inside the closure of domain
    // interval i; exact endpoints, orientation handled
    Interval map_interval(const Interval& iv, int i) const;
    // preimage of (u,v) inside the closure of image slot j
    Interval map_interval_back(const Interval& iv, int j) const;

    Scalar one_sided_limit(int j, int side) const;
    std::vector<OneSidedLimitPoint> one_sided_limits() const;   // all 2n of them

    // solutions of T(x*) = x* inside flipped intervals: (interval index, x*)
    std::vector<std::pair<int, Scalar>> flipped_fixed_points() const;

  private:
    LengthVector lambda_;
    SignedPermutation p_;
    std::vector<Scalar> x_;
    std::vector<Scalar> y_;
};

Iet build_iet(LengthVector lambda, SignedPermutation p);

} // namespace ietflip
