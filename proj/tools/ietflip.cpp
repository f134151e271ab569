// Command line front end: classify, construct, verify, perturb, orbit-svg.
// Exit codes: 0 success, 2 parse error, 3 dynamical error (tie/cap/degenerate),
// 4 invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ietflip/commands.hpp"

namespace {

using ietflip::Json;

Json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ietflip::ParseError("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ietflip::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j, const std::string& out_path, bool json_to_stdout) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ietflip::ParseError("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
    if (json_to_stdout || out_path.empty()) std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact interval exchange transformations with flips"};
    app.require_subcommand(1);

    int rauzy_cap = 2000;
    int orbit_cap = 4000;
    std::uint64_t seed = 1;
    bool json_out = false;
    std::string out_path;
    app.add_option("--caps-rauzy", rauzy_cap, "induction step / connection scan cap");
    app.add_option("--caps-orbit", orbit_cap, "orbit iteration cap");
    app.add_option("--seed", seed, "random seed");
    app.add_flag("--json", json_out, "print full JSON to stdout");
    app.add_option("--out", out_path, "write JSON/SVG output to this file");

    auto* classify_cmd = app.add_subcommand("classify", "classify the invariant components");
    std::string classify_input;
    classify_cmd->add_option("input", classify_input, "IET JSON file or - for stdin")
        ->required();

    auto* construct_cmd =
        app.add_subcommand("construct", "build an instance with a prescribed profile");
    int cn = 0, ck = 0, cl = 0;
    construct_cmd->add_option("n", cn, "number of intervals")->required();
    construct_cmd->add_option("k", ck, "periodic components")->required();
    construct_cmd->add_option("l", cl, "minimal components")->required();

    auto* verify_cmd = app.add_subcommand("verify", "randomized invariant harness");
    int vn = 4, vsamples = 100;
    bool vlemmas = false;
    verify_cmd->add_option("--n", vn, "number of intervals");
    verify_cmd->add_option("--samples", vsamples, "sample count");
    verify_cmd->add_flag("--lemma-checks", vlemmas, "also run the singular-point checks");

    auto* perturb_cmd = app.add_subcommand("perturb", "stability smoke test");
    std::string perturb_input, magnitude_str = "1/1000";
    int trials = 50;
    perturb_cmd->add_option("input", perturb_input, "IET JSON file or - for stdin")
        ->required();
    perturb_cmd->add_option("--magnitude", magnitude_str, "relative size, rational p/q");
    perturb_cmd->add_option("--trials", trials, "number of perturbed copies");

    auto* svg_cmd = app.add_subcommand("orbit-svg", "plot sample orbits as an SVG");
    std::string svg_input, witnesses_str;
    int svg_steps = 200;
    svg_cmd->add_option("input", svg_input, "IET JSON file or - for stdin")->required();
    svg_cmd->add_option("--witnesses", witnesses_str,
                        "comma separated rationals; default: one per component");
    svg_cmd->add_option("--steps", svg_steps, "orbit length per witness");

    CLI11_PARSE(app, argc, argv);

    ietflip::ClassifyCaps caps;
    caps.rauzy_cap = rauzy_cap;

    try {
        if (classify_cmd->parsed()) {
            Json report = ietflip::cmd_classify(read_input(classify_input), caps);
            std::cout << report.at("summary").get<std::string>() << "\n";
            if (json_out || !out_path.empty()) emit(report, out_path, json_out);
        } else if (construct_cmd->parsed()) {
            emit(ietflip::cmd_construct(cn, ck, cl, seed), out_path, true);
        } else if (verify_cmd->parsed()) {
            ietflip::HarnessConfig config;
            config.n = vn;
            config.sample_count = vsamples;
            config.seed = seed;
            config.rauzy_cap = rauzy_cap;
            config.orbit_cap = orbit_cap;
            config.lemma_checks = vlemmas;
            emit(ietflip::cmd_verify(config), out_path, true);
        } else if (perturb_cmd->parsed()) {
            Json report =
                ietflip::cmd_perturb(read_input(perturb_input),
                                     ietflip::parse_rat(magnitude_str), trials, seed, caps);
            emit(report, out_path, true);
        } else if (svg_cmd->parsed()) {
            std::vector<std::string> specs;
            std::stringstream ss(witnesses_str);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) specs.push_back(item);
            std::string svg =
                ietflip::cmd_orbit_svg(read_input(svg_input), specs, svg_steps, caps);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(out_path);
                if (!out) throw ietflip::ParseError("cannot open output file: " + out_path);
                out << svg;
                std::cout << "wrote " << out_path << "\n";
            }
        }
    } catch (const ietflip::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ietflip::InvalidCounts& e) {
        std::cerr << "invalid counts: " << e.what() << "\n";
        return 2;
    } catch (const ietflip::DynamicalError& e) {
        std::cerr << "dynamical error: " << e.what() << "\n";
        return 3;
    } catch (const ietflip::HarnessFailure& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const ietflip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
