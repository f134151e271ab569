#include "ietflip/commands.hpp"

#include <algorithm>

#include "ietflip/constructions.hpp"
#include "ietflip/orbits.hpp"
#include "ietflip/svg.hpp"

namespace ietflip {

VerifyReport run_verify(const HarnessConfig& config) {
    if (config.rauzy_cap < 1 || config.orbit_cap < 1)
        throw OutOfRange("caps must be >= 1");
    VerifyReport report;
    Rng rng(config.seed);
    ClassifyCaps caps;
    caps.rauzy_cap = config.rauzy_cap;
    caps.piece_budget = config.piece_budget;
    caps.with_periods = false;

    for (int s = 0; s < config.sample_count; ++s) {
        ++report.samples;
        SignedPermutation p = random_irreducible_flip_permutation(config.n, rng);
        LengthVector lambda = sample_mu(config.n, rng);
        ComponentReport cr;
        try {
            cr = classify(lambda, p, caps);
        } catch (const TieEncountered&) {
            ++report.tie_count;
            continue;
        } catch (const CapExceeded&) {
            ++report.cap_count;
            continue;
        } catch (const DegenerateBlock&) {
            ++report.degenerate_count;
            continue;
        }
        ++report.terminated;
        if (!check_component_bound(cr, config.n)) ++report.bound_violations;
        if (cr.n_per == 0) ++report.nper_zero_with_flips;
        int flipped = 0;
        for (const auto& c : cr.components)
            if (c.kind == ComponentKind::Periodic && c.flipped) ++flipped;
        if (flipped == 0) ++report.zero_flipped_reports;
        if (config.lemma_checks) {
            Iet t(lambda, p);
            // connection lengths scale with the component return times, so
            // the scan depth follows the materialized piece count
            long total_pieces = 0;
            for (const auto& c : cr.components)
                total_pieces += static_cast<long>(c.support.size());
            const int depth = static_cast<int>(
                std::max<long>(config.orbit_cap, 4 * total_pieces + 64));
            if (!minimal_components_contain_singular(cr, t) ||
                !boundaries_on_saddle_connections(cr, t, depth))
                ++report.lemma_failures;
        }
    }
    return report;
}

PerturbReport run_perturb(const IetData& data, const Rat& magnitude, int trials,
                          std::uint64_t seed, const ClassifyCaps& caps) {
    if (magnitude < 0 || magnitude >= 1)
        throw OutOfRange("perturbation magnitude must lie in [0, 1)");
    PerturbReport report;
    report.max_rho = Scalar(data.lambda.basis());

    ComponentReport base = classify(data.lambda, data.p, caps);
    report.base_per = base.n_per;
    report.base_min = base.n_min;

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        ++report.trials;
        std::vector<Scalar> perturbed;
        perturbed.reserve(data.lambda.n());
        for (const auto& l : data.lambda.values()) {
            Rat delta = magnitude * make_rat(rng.uniform(-1000, 1000), 1000);
            perturbed.push_back(l * (Rat(1) + delta));
        }
        ComponentReport cr;
        try {
            cr = classify(LengthVector(std::move(perturbed)), data.p, caps);
        } catch (const TieEncountered&) {
            ++report.tie_count;
            continue;
        }
        if (cr.n_per != base.n_per || cr.n_min != base.n_min) continue;
        ++report.preserved;
        // components are sorted by position; match the k-th of each kind
        auto of_kind = [](const ComponentReport& r, ComponentKind k) {
            std::vector<const Component*> out;
            for (const auto& c : r.components)
                if (c.kind == k) out.push_back(&c);
            return out;
        };
        for (ComponentKind kind : {ComponentKind::Periodic, ComponentKind::Minimal}) {
            auto a = of_kind(base, kind);
            auto b = of_kind(cr, kind);
            for (std::size_t i = 0; i < a.size(); ++i) {
                Scalar rho = support_distance(a[i]->support, b[i]->support);
                Scalar rho2 = support_distance(b[i]->support, a[i]->support);
                if (rho2 > rho) rho = rho2;
                if (!report.has_rho || rho > report.max_rho) {
                    report.max_rho = rho;
                    report.has_rho = true;
                }
            }
        }
    }
    return report;
}

Json cmd_classify(const Json& input, const ClassifyCaps& caps) {
    IetData data = iet_from_json(input);
    ComponentReport report = classify(data.lambda, data.p, caps);
    return report_to_json(report, data.lambda.basis());
}

Json cmd_construct(int n, int k, int ell, std::uint64_t seed) {
    Construction c = construct_theorem_c({n, k, ell, seed});
    return construction_to_json(c);
}

Json cmd_verify(const HarnessConfig& config) {
    VerifyReport r = run_verify(config);
    Json j{{"samples", r.samples},
           {"terminated", r.terminated},
           {"bound_violations", r.bound_violations},
           {"nper_zero_with_flips", r.nper_zero_with_flips},
           {"zero_flipped_reports", r.zero_flipped_reports},
           {"tie_count", r.tie_count},
           {"cap_count", r.cap_count},
           {"degenerate_count", r.degenerate_count},
           {"lemma_failures", r.lemma_failures},
           {"ok", r.ok()}};
    if (!r.ok())
        throw HarnessFailure("verification harness found violations: " + j.dump());
    return j;
}

Json cmd_perturb(const Json& input, const Rat& magnitude, int trials, std::uint64_t seed,
                 const ClassifyCaps& caps) {
    IetData data = iet_from_json(input);
    PerturbReport r = run_perturb(data, magnitude, trials, seed, caps);
    Json j{{"trials", r.trials},
           {"preserved", r.preserved},
           {"tie_count", r.tie_count},
           {"profile", Json::array({r.base_per, r.base_min})}};
    if (r.has_rho) {
        j["max_rho"] = scalar_to_json(r.max_rho);
        j["max_rho_approx"] = r.max_rho.approx();
    }
    return j;
}

std::string cmd_orbit_svg(const Json& input, const std::vector<std::string>& witness_specs,
                          int steps, const ClassifyCaps& caps) {
    IetData data = iet_from_json(input);
    ComponentReport report = classify(data.lambda, data.p, caps);
    Iet t(data.lambda, data.p);
    std::vector<Scalar> witnesses;
    if (witness_specs.empty()) {
        for (const auto& c : report.components) witnesses.push_back(c.witness);
    } else {
        for (const auto& spec : witness_specs)
            witnesses.emplace_back(data.lambda.basis(), parse_rat(spec));
    }
    for (const auto& w : witnesses)
        if (w.sign() <= 0 || w >= t.total())
            throw OutOfRange("witness outside (0, c)");
    return orbit_svg(t, report, witnesses, steps);
}

} // namespace ietflip
