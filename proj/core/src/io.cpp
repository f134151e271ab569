#include "ietflip/io.hpp"

namespace ietflip {

Json scalar_to_json(const Scalar& s) {
    Json coeffs = Json::array();
    for (const auto& [mask, q] : s.coeffs()) {
        Json subset = Json::array();
        for (long d : s.basis()->subset_of(mask)) subset.push_back(d);
        coeffs.push_back(Json::array({subset, rat_to_string(q)}));
    }
    return Json{{"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j, const BasisPtr& basis) {
    try {
        if (j.is_number_integer())
            return Scalar(basis, Rat(static_cast<long>(j.get<long long>())));
        if (j.is_string()) return Scalar(basis, parse_rat(j.get<std::string>()));
        if (!j.is_object() || !j.contains("coeffs"))
            throw ParseError("scalar must be an integer, a \"p/q\" string, or a coeffs object");
        Scalar out(basis);
        for (const auto& entry : j.at("coeffs")) {
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError("scalar coefficient entries are [subset, rational] pairs");
            std::vector<long> subset;
            for (const auto& d : entry.at(0)) subset.push_back(d.get<long>());
            Rat q = parse_rat(entry.at(1).get<std::string>());
            out = out + Scalar::term(basis, basis->mask_of(subset), q);
        }
        return out;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad scalar: ") + e.what());
    }
}

Json iet_to_json(const LengthVector& lambda, const SignedPermutation& p) {
    Json basis = Json::array();
    for (long d : lambda.basis()->radicands()) basis.push_back(d);
    Json lengths = Json::array();
    for (const auto& l : lambda.values()) lengths.push_back(scalar_to_json(l));
    return Json{{"basis", basis}, {"lengths", lengths}, {"perm", p.entries()}};
}

IetData iet_from_json(const Json& j) {
    try {
        std::vector<long> radicands;
        if (j.contains("basis"))
            for (const auto& d : j.at("basis")) radicands.push_back(d.get<long>());
        BasisPtr basis;
        try {
            basis = make_basis(std::move(radicands));
        } catch (const OutOfRange& e) {
            throw ParseError(std::string("bad basis: ") + e.what());
        }
        std::vector<Scalar> lengths;
        for (const auto& l : j.at("lengths")) lengths.push_back(scalar_from_json(l, basis));
        std::vector<int> perm;
        for (const auto& v : j.at("perm")) perm.push_back(v.get<int>());
        try {
            return IetData{LengthVector(std::move(lengths)), SignedPermutation(std::move(perm))};
        } catch (const Error& e) {
            throw ParseError(std::string("bad IET data: ") + e.what());
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad IET JSON: ") + e.what());
    }
}

Json interval_set_to_json(const IntervalSet& set) {
    Json out = Json::array();
    for (const auto& iv : set)
        out.push_back(Json::array({scalar_to_json(iv.lo), scalar_to_json(iv.hi)}));
    return out;
}

Json report_to_json(const ComponentReport& report, const BasisPtr& basis) {
    Json comps = Json::array();
    for (const auto& c : report.components) {
        Json jc{{"kind", c.kind == ComponentKind::Periodic ? "periodic" : "minimal"},
                {"support", interval_set_to_json(c.support)},
                {"witness", scalar_to_json(c.witness)}};
        if (c.kind == ComponentKind::Periodic) {
            jc["period"] = c.period;
            jc["flipped"] = c.flipped;
            jc["first_return"] = c.first_return;
            jc["orientation"] = c.orientation;
        }
        comps.push_back(std::move(jc));
    }
    Json jbasis = Json::array();
    for (long d : basis->radicands()) jbasis.push_back(d);
    return Json{{"n", report.n},
                {"n_per", report.n_per},
                {"n_min", report.n_min},
                {"summary", report.summary()},
                {"basis", jbasis},
                {"components", comps},
                {"expansion_words", report.expansion_words}};
}

std::string word_to_string(const std::vector<StepType>& word) {
    std::string out;
    for (StepType t : word) out += step_char(t);
    return out;
}

Json construction_to_json(const Construction& c) {
    Json iet = iet_to_json(c.lambda, c.p);
    iet["expected"] = Json{{"n_per", c.expected_per}, {"n_min", c.expected_min}};
    iet["word"] = word_to_string(c.word);
    iet["target"] = c.target.entries();
    return iet;
}

} // namespace ietflip
