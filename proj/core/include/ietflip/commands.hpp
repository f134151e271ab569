#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ietflip/classify.hpp"
#include "ietflip/io.hpp"

namespace ietflip {

struct HarnessConfig {
    int n = 4;
    int sample_count = 100;
    std::uint64_t seed = 1;
    int rauzy_cap = 2000;
    int orbit_cap = 4000;
    Rat perturbation_magnitude = make_rat(1, 1000);
    long piece_budget = 200000;
    bool lemma_checks = false;
};

struct VerifyReport {
    int samples = 0;
    int terminated = 0;
    int bound_violations = 0;
    int nper_zero_with_flips = 0;
    int zero_flipped_reports = 0;
    int tie_count = 0;
    int cap_count = 0;
    int degenerate_count = 0;
    int lemma_failures = 0;

    bool ok() const {
        return bound_violations == 0 && nper_zero_with_flips == 0 &&
               zero_flipped_reports == 0 && lemma_failures == 0;
    }
};

// sample random irreducible flip permutations with sampled irrational
// lengths, classify each, and tally the invariants
VerifyReport run_verify(const HarnessConfig& config);

struct PerturbReport {
    int trials = 0;
    int preserved = 0;
    int tie_count = 0;
    int base_per = 0;
    int base_min = 0;
    bool has_rho = false;
    Scalar max_rho;
};

PerturbReport run_perturb(const IetData& data, const Rat& magnitude, int trials,
                          std::uint64_t seed, const ClassifyCaps& caps);

// JSON fronts used by the command line tool
Json cmd_classify(const Json& input, const ClassifyCaps& caps);
Json cmd_construct(int n, int k, int ell, std::uint64_t seed);
Json cmd_verify(const HarnessConfig& config);   // throws HarnessFailure when not ok
Json cmd_perturb(const Json& input, const Rat& magnitude, int trials, std::uint64_t seed,
                 const ClassifyCaps& caps);
// empty witness list plots the report's own component witnesses
std::string cmd_orbit_svg(const Json& input, const std::vector<std::string>& witness_specs,
                          int steps, const ClassifyCaps& caps);

} // namespace ietflip
