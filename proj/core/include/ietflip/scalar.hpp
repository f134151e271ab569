#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ietflip/rational.hpp"

namespace ietflip {

// Real field Q(sqrt(d_1), ..., sqrt(d_m)) for distinct square-free d_i >= 2.
// A field element is stored on the basis { sqrt(prod_{i in S} d_i) : S subset },
// indexed by bitmask; the empty subset is the rational part. Equality with zero
// is then simply "no coefficients", with no tolerance anywhere.
class Basis {
  public:
    Basis();                                   // rationals only
    explicit Basis(std::vector<long> radicands);

    std::size_t size() const { return radicands_.size(); }
    const std::vector<long>& radicands() const { return radicands_; }
    std::uint32_t mask_count() const { return 1u << radicands_.size(); }

    // prod_{i in mask} d_i  (1 for the empty subset)
    const Int& subset_product(std::uint32_t mask) const { return products_[mask]; }
    // double approximation of sqrt(subset_product(mask))
    double subset_sqrt(std::uint32_t mask) const { return sqrts_[mask]; }

    std::uint32_t mask_of(const std::vector<long>& subset) const;
    std::vector<long> subset_of(std::uint32_t mask) const;

    bool operator==(const Basis& o) const { return radicands_ == o.radicands_; }

  private:
    std::vector<long> radicands_;
    std::vector<Int> products_;
    std::vector<double> sqrts_;
};

using BasisPtr = std::shared_ptr<const Basis>;

BasisPtr make_basis(std::vector<long> radicands);

class Scalar {
  public:
    Scalar() : Scalar(default_basis()) {}
    explicit Scalar(BasisPtr basis);                    // zero
    Scalar(BasisPtr basis, Rat rational);
    Scalar(BasisPtr basis, long value);

    // coeff * sqrt(subset_product(mask))
    static Scalar term(BasisPtr basis, std::uint32_t mask, Rat coeff);

    const BasisPtr& basis() const { return basis_; }
    // sorted by mask, zero coefficients dropped
    const std::vector<std::pair<std::uint32_t, Rat>>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // true iff no mass on any non-empty subset
    bool is_rational() const;
    Rat rational_part() const;

    // exact sign in {-1,0,+1}; double filter first, adaptive-precision
    // integer-sqrt intervals when the filter cannot decide
    int sign() const;

    double approx() const { return apx_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator*(const Rat& q) const;
    Scalar operator/(const Rat& q) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return cmp(*this, o) < 0; }
    bool operator>(const Scalar& o) const { return cmp(*this, o) > 0; }
    bool operator<=(const Scalar& o) const { return cmp(*this, o) <= 0; }
    bool operator>=(const Scalar& o) const { return cmp(*this, o) >= 0; }

    // sign(a - b) without building the difference when doubles suffice
    static int cmp(const Scalar& a, const Scalar& b);

    std::string str() const;

    static const BasisPtr& default_basis();   // empty basis, shared

  private:
    friend Scalar abs(const Scalar&);
    void check_same_basis(const Scalar& o) const;
    void refresh_approx();
    int exact_sign() const;

    BasisPtr basis_;
    std::vector<std::pair<std::uint32_t, Rat>> coeffs_;
    double apx_ = 0.0;
    double err_ = 0.0;   // certified bound on |value - apx_|
};

Scalar abs(const Scalar& s);

} // namespace ietflip
