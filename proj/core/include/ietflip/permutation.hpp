#pragma once

#include <string>
#include <vector>

#include "ietflip/errors.hpp"

namespace ietflip {

// Signed permutation p with |p| a permutation of {1..n} and the signs telling
// which intervals are flipped. Entries are 1-based values; index arguments on
// the accessors are 1-based as well so code reads like the usual notation.
class SignedPermutation {
  public:
    explicit SignedPermutation(std::vector<int> entries);

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

    int at(int i) const { return entries_[i - 1]; }         // p_i
    int pi(int i) const { return pi_[i - 1]; }              // |p_i|
    int theta(int i) const { return entries_[i - 1] > 0 ? 1 : -1; }
    int pi_inverse(int value) const { return pinv_[value - 1]; }

    bool has_flips() const;
    // no proper prefix {1..k} is pi-invariant
    bool irreducible() const;
    // |p_n| != n, the domain condition for Rauzy induction
    bool in_p_star() const { return pi(n()) != n(); }

    bool operator==(const SignedPermutation& o) const { return entries_ == o.entries_; }
    bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
    bool operator<(const SignedPermutation& o) const { return entries_ < o.entries_; }

    std::string str() const;

  private:
    std::vector<int> entries_;
    std::vector<int> pi_;
    std::vector<int> pinv_;
};

// all 2^n * n! signed permutations of {1..n}, lexicographic
std::vector<SignedPermutation> all_signed_permutations(int n);

} // namespace ietflip
