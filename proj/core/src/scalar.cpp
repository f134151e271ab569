#include "ietflip/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ietflip {

namespace {

bool square_free(long d) {
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

// generous per-term relative slack: covers mpq_get_d, the sqrt approximation,
// the multiply and every later add in one go
constexpr double kRelSlack = 1e-13;
constexpr double kAbsSlack = 1e-280;

} // namespace

Basis::Basis() : products_(1, Int(1)), sqrts_(1, 1.0) {}

Basis::Basis(std::vector<long> radicands) : radicands_(std::move(radicands)) {
    if (radicands_.size() > 16)
        throw OutOfRange("basis too large");
    long prev = 1;
    for (long d : radicands_) {
        if (d < 2) throw OutOfRange("radicand must be >= 2");
        if (d <= prev) throw OutOfRange("radicands must be strictly ascending");
        if (!square_free(d)) throw OutOfRange("radicand must be square-free");
        prev = d;
    }
    const std::uint32_t m = mask_count();
    products_.resize(m);
    sqrts_.resize(m);
    for (std::uint32_t mask = 0; mask < m; ++mask) {
        Int prod(1);
        for (std::size_t i = 0; i < radicands_.size(); ++i)
            if (mask & (1u << i)) prod *= radicands_[i];
        products_[mask] = prod;
        sqrts_[mask] = std::sqrt(prod.get_d());
    }
}

std::uint32_t Basis::mask_of(const std::vector<long>& subset) const {
    std::uint32_t mask = 0;
    for (long d : subset) {
        auto it = std::find(radicands_.begin(), radicands_.end(), d);
        if (it == radicands_.end())
            throw BasisMismatch("radicand not in basis: " + std::to_string(d));
        mask |= 1u << (it - radicands_.begin());
    }
    return mask;
}

std::vector<long> Basis::subset_of(std::uint32_t mask) const {
    std::vector<long> out;
    for (std::size_t i = 0; i < radicands_.size(); ++i)
        if (mask & (1u << i)) out.push_back(radicands_[i]);
    return out;
}

BasisPtr make_basis(std::vector<long> radicands) {
    return std::make_shared<const Basis>(std::move(radicands));
}

const BasisPtr& Scalar::default_basis() {
    static const BasisPtr b = std::make_shared<const Basis>();
    return b;
}

Scalar::Scalar(BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw OutOfRange("null basis");
}

Scalar::Scalar(BasisPtr basis, Rat rational) : Scalar(std::move(basis)) {
    if (rational != 0) coeffs_.emplace_back(0u, std::move(rational));
    refresh_approx();
}

Scalar::Scalar(BasisPtr basis, long value) : Scalar(std::move(basis), Rat(value)) {}

Scalar Scalar::term(BasisPtr basis, std::uint32_t mask, Rat coeff) {
    Scalar s(std::move(basis));
    if (mask >= s.basis_->mask_count()) throw OutOfRange("subset mask out of range");
    if (coeff != 0) s.coeffs_.emplace_back(mask, std::move(coeff));
    s.refresh_approx();
    return s;
}

void Scalar::check_same_basis(const Scalar& o) const {
    if (basis_ == o.basis_) return;
    if (*basis_ == *o.basis_) return;
    throw BasisMismatch("scalars over different bases");
}

void Scalar::refresh_approx() {
    double apx = 0.0, err = 0.0;
    for (const auto& [mask, q] : coeffs_) {
        const double t = q.get_d() * basis_->subset_sqrt(mask);
        apx += t;
        err += std::fabs(t) * kRelSlack + kAbsSlack;
    }
    apx_ = apx;
    err_ = err;
}

bool Scalar::is_rational() const {
    for (const auto& [mask, q] : coeffs_)
        if (mask != 0) return false;
    return true;
}

Rat Scalar::rational_part() const {
    for (const auto& [mask, q] : coeffs_)
        if (mask == 0) return q;
    return Rat(0);
}

Scalar Scalar::operator-() const {
    Scalar out(basis_);
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& [mask, q] : coeffs_) out.coeffs_.emplace_back(mask, -q);
    out.refresh_approx();
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_basis(o);
    Scalar out(basis_);
    out.coeffs_.reserve(coeffs_.size() + o.coeffs_.size());
    auto a = coeffs_.begin(), b = o.coeffs_.begin();
    while (a != coeffs_.end() || b != o.coeffs_.end()) {
        if (b == o.coeffs_.end() || (a != coeffs_.end() && a->first < b->first)) {
            out.coeffs_.push_back(*a++);
        } else if (a == coeffs_.end() || b->first < a->first) {
            out.coeffs_.push_back(*b++);
        } else {
            Rat sum = a->second + b->second;
            if (sum != 0) out.coeffs_.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    out.refresh_approx();
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_basis(o);
    // sqrt(m_S) * sqrt(m_T) = prod(S&T) * sqrt(m_{S^T})
    std::vector<std::pair<std::uint32_t, Rat>> acc;
    for (const auto& [ma, qa] : coeffs_) {
        for (const auto& [mb, qb] : o.coeffs_) {
            Rat q = qa * qb;
            const std::uint32_t common = ma & mb;
            if (common != 0) q *= Rat(basis_->subset_product(common));
            acc.emplace_back(ma ^ mb, std::move(q));
        }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Scalar out(basis_);
    for (auto& [mask, q] : acc) {
        if (!out.coeffs_.empty() && out.coeffs_.back().first == mask) {
            out.coeffs_.back().second += q;
            if (out.coeffs_.back().second == 0) out.coeffs_.pop_back();
        } else if (q != 0) {
            out.coeffs_.emplace_back(mask, std::move(q));
        }
    }
    out.refresh_approx();
    return out;
}

Scalar Scalar::operator*(const Rat& q) const {
    Scalar out(basis_);
    if (q != 0) {
        out.coeffs_.reserve(coeffs_.size());
        for (const auto& [mask, c] : coeffs_) out.coeffs_.emplace_back(mask, c * q);
    }
    out.refresh_approx();
    return out;
}

Scalar Scalar::operator/(const Rat& q) const {
    if (q == 0) throw OutOfRange("division by zero rational");
    return *this * make_rat(Int(q.get_den()), Int(q.get_num()));
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_basis(o);
    return coeffs_ == o.coeffs_;
}

int Scalar::sign() const {
    if (coeffs_.empty()) return 0;
    if (apx_ > err_) return 1;
    if (apx_ < -err_) return -1;
    return exact_sign();
}

int Scalar::exact_sign() const {
    if (coeffs_.size() == 1) return sgn(coeffs_.front().second);
    // interval refinement: sqrt(m) is enclosed by [s, s+1] / 2^B with
    // s = isqrt(m * 4^B); double B until the accumulated interval misses 0
    for (unsigned bits = 64;; bits *= 2) {
        Int scale = Int(1) << bits;
        Rat lo(0), hi(0);
        for (const auto& [mask, q] : coeffs_) {
            if (mask == 0) {
                lo += q;
                hi += q;
                continue;
            }
            Int scaled = basis_->subset_product(mask) << (2 * bits);
            Int s = sqrt(scaled);   // floor square root
            Rat slo = make_rat(s, scale);
            Rat shi = make_rat(s + 1, scale);
            if (q > 0) {
                lo += q * slo;
                hi += q * shi;
            } else {
                lo += q * shi;
                hi += q * slo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (bits > 1u << 20)
            throw OutOfRange("sign refinement failed to separate from zero");
    }
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    a.check_same_basis(b);
    const double gap = a.apx_ - b.apx_;
    const double tol = a.err_ + b.err_ + kAbsSlack;
    if (gap > tol) return 1;
    if (gap < -tol) return -1;
    return (a - b).sign();
}

std::string Scalar::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, q] : coeffs_) {
        if (!first) os << (q > 0 ? " + " : " - ");
        const Rat aq = first ? q : Rat(::abs(q));
        if (mask == 0) {
            os << rat_to_string(aq);
        } else {
            if (aq != 1) os << rat_to_string(aq) << "*";
            os << "sqrt(" << basis_->subset_product(mask).get_str() << ")";
        }
        first = false;
    }
    return os.str();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

} // namespace ietflip
