#pragma once

#include "fuzzlcm/fuzzy_set.hpp"
#include "fuzzlcm/lcm.hpp"
#include "fuzzlcm/rpcf.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace fuzzlcm::io {

using json = nlohmann::json;

/// Accepts either a bare grade array or {"grades": [...], "universe": [...]}.
/// Grades outside [0,1] are rejected with the offending field named.
FuzzySetVector set_from_json(const json& j, const std::string& field);
json set_to_json(const FuzzySetVector& set);

struct InferenceRequest {
    FuzzySetVector antecedent;
    FuzzySetVector consequent;
    FuzzySetVector premise;
    harness::Direction direction = harness::Direction::Fmp;
    CaseTag tag = CaseTag::Case1;
    SignForm form = SignForm::ThreeValued;
    std::optional<FuzzySetVector> tilt;
};

InferenceRequest request_from_json(const json& j);
json result_to_json(const LcmInferenceResult& r);

harness::ExperimentSpec spec_from_json(const json& j);
std::vector<harness::ExperimentSpec> specs_from_json(const json& j);

json report_to_json(const harness::RpcfReport& report);
json comparison_to_json(const harness::ComparisonTable& table);

json load_json_file(const std::string& path);

std::vector<std::string> split_selectors(const std::string& list);

} // namespace fuzzlcm::io
