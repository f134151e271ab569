#include "ietflip/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace ietflip {

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0) throw DimensionMismatch("empty permutation");
    pi_.resize(n);
    pinv_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = entries_[i];
        if (v == 0 || v < -n || v > n)
            throw DimensionMismatch("entry out of range in signed permutation");
        const int a = v > 0 ? v : -v;
        if (pinv_[a - 1] != 0)
            throw DimensionMismatch("repeated value in signed permutation");
        pi_[i] = a;
        pinv_[a - 1] = i + 1;
    }
}

bool SignedPermutation::has_flips() const {
    return std::any_of(entries_.begin(), entries_.end(), [](int v) { return v < 0; });
}

bool SignedPermutation::irreducible() const {
    int seen_max = 0;
    for (int k = 1; k < n(); ++k) {
        seen_max = std::max(seen_max, pi_[k - 1]);
        if (seen_max == k) return false;
    }
    return true;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<int> vals(n);
    std::iota(vals.begin(), vals.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        const std::uint32_t lim = 1u << n;
        for (std::uint32_t signs = 0; signs < lim; ++signs) {
            std::vector<int> e(vals);
            for (int i = 0; i < n; ++i)
                if (signs & (1u << i)) e[i] = -e[i];
            out.emplace_back(std::move(e));
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

} // namespace ietflip
