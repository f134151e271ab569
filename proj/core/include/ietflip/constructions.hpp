#pragma once

#include <cstdint>
#include <vector>

#include "ietflip/iet.hpp"
#include "ietflip/rauzy.hpp"
#include "ietflip/rng.hpp"

namespace ietflip {

struct ConstructionSpec {
    int n = 1;
    int k = 1;      // periodic components requested
    int ell = 0;    // minimal components requested
    std::uint64_t seed = 1;
};

// realizable profiles: (k >= 1, ell >= 1, k + 2 ell <= n) or (k = n, ell = 0)
bool admissible_counts(int n, int k, int ell);

// The permutation family realizing (k, ell): a head placing the flips, then
// descending flipped pairs, then a flipped tail; its (n-1)-fold b-image
// splits into one size-r block, ell-1 transposition blocks and k flipped
// singletons.
SignedPermutation theorem_c_permutation(int n, int k, int ell);
SignedPermutation theorem_c_target(int n, int k, int ell);

// lambda = M mu with M the ordered product of the step matrices along `word`
// starting from p; mu has entries a + b sqrt2 + c sqrt3 with small positive
// random rationals. The trajectory of (lambda, p) then replays `word` exactly.
LengthVector cone_sample(const SignedPermutation& p, const std::vector<StepType>& word,
                         std::uint64_t seed);

struct Construction {
    LengthVector lambda;
    SignedPermutation p;
    SignedPermutation target;          // the checked b^{n-1} image
    std::vector<StepType> word;
    int expected_per = 0;
    int expected_min = 0;
};

Construction construct_theorem_c(const ConstructionSpec& spec);

// samplers shared with the verification harness
LengthVector sample_mu(int n, Rng& rng);
SignedPermutation random_irreducible_flip_permutation(int n, Rng& rng);

} // namespace ietflip
