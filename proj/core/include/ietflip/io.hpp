#pragma once

#include <json.hpp>

#include "ietflip/classify.hpp"
#include "ietflip/constructions.hpp"
#include "ietflip/iet.hpp"

namespace ietflip {

using Json = nlohmann::json;

// {"coeffs": [[[2], "1/2"], [[], "3"], ...]} on the enclosing basis
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const BasisPtr& basis);

struct IetData {
    LengthVector lambda;
    SignedPermutation p;
};

// {"basis": [2,3], "lengths": [...], "perm": [-2,1]}
Json iet_to_json(const LengthVector& lambda, const SignedPermutation& p);
IetData iet_from_json(const Json& j);

Json interval_set_to_json(const IntervalSet& set);
Json report_to_json(const ComponentReport& report, const BasisPtr& basis);
Json construction_to_json(const Construction& c);

std::string word_to_string(const std::vector<StepType>& word);

} // namespace ietflip
