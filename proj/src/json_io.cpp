#include "fuzzlcm/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace fuzzlcm::io {

namespace {

Array array_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument(field + ": expected a non-empty number array");
    }
    Array out(static_cast<Eigen::Index>(j.size()));
    Eigen::Index i = 0;
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw std::invalid_argument(field + "[" + std::to_string(i) + "]: not a number");
        }
        out[i++] = v.get<double>();
    }
    return out;
}

} // namespace

FuzzySetVector set_from_json(const json& j, const std::string& field) {
    try {
        if (j.is_array()) {
            return FuzzySetVector(array_from_json(j, field));
        }
        if (j.is_object()) {
            Array grades = array_from_json(j.at("grades"), field + ".grades");
            if (j.contains("universe")) {
                return FuzzySetVector(std::move(grades),
                                      array_from_json(j.at("universe"), field + ".universe"));
            }
            return FuzzySetVector(std::move(grades));
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(field + ": " + e.what());
    }
    throw std::invalid_argument(field + ": expected an array or {\"grades\": ...}");
}

json set_to_json(const FuzzySetVector& set) {
    json j;
    j["grades"] = std::vector<double>(set.grades().data(),
                                      set.grades().data() + set.size());
    if (set.universe()) {
        j["universe"] = std::vector<double>(set.universe()->data(),
                                            set.universe()->data() + set.universe()->size());
    }
    return j;
}

InferenceRequest request_from_json(const json& j) {
    InferenceRequest req{
        set_from_json(j.at("rule").at("antecedent"), "rule.antecedent"),
        set_from_json(j.at("rule").at("consequent"), "rule.consequent"),
        set_from_json(j.at("premise"), "premise"),
        harness::Direction::Fmp, CaseTag::Case1, SignForm::ThreeValued, {}};
    const std::string dir = j.value("direction", "fmp");
    if (dir == "fmp") {
        req.direction = harness::Direction::Fmp;
    } else if (dir == "fmt") {
        req.direction = harness::Direction::Fmt;
    } else {
        throw std::invalid_argument("direction: must be fmp or fmt");
    }
    req.tag = parse_case(j.value("case", dir == "fmp" ? "case1" : "case6"));
    req.form = parse_sign_form(j.value("form", "p3"));
    if (j.contains("tilt")) {
        req.tilt = set_from_json(j.at("tilt"), "tilt");
    }
    return req;
}

json result_to_json(const LcmInferenceResult& r) {
    json j;
    j["result"] = std::vector<double>(r.result.grades().data(),
                                      r.result.grades().data() + r.result.size());
    j["distance"] = r.distance;
    j["degenerate"] = r.degenerate;
    return j;
}

harness::ExperimentSpec spec_from_json(const json& j) {
    harness::ExperimentSpec spec{
        j.value("name", "experiment"),
        set_from_json(j.at("antecedent"), "antecedent"),
        set_from_json(j.at("consequent"), "consequent"),
        harness::Direction::Fmp, harness::ClassTag::Class1, {}, {}};
    const std::string dir = j.value("direction", "fmp");
    spec.direction = dir == "fmt" ? harness::Direction::Fmt : harness::Direction::Fmp;
    spec.cls = j.value("class", "class1") == "class2" ? harness::ClassTag::Class2
                                                      : harness::ClassTag::Class1;
    for (const auto& c : j.at("cases")) {
        harness::CaseSpec cs{parse_case(c.at("case").get<std::string>()), {}, {}, {}};
        if (c.contains("branch")) {
            cs.branch = parse_case(c.at("branch").get<std::string>());
        }
        if (c.contains("tilt_premise")) {
            cs.tilt_premise = set_from_json(c.at("tilt_premise"), "tilt_premise");
        }
        if (c.contains("tilt_target")) {
            cs.tilt_target = set_from_json(c.at("tilt_target"), "tilt_target");
        }
        spec.cases.push_back(std::move(cs));
    }
    spec.methods = j.at("methods").get<std::vector<std::string>>();
    return spec;
}

std::vector<harness::ExperimentSpec> specs_from_json(const json& j) {
    std::vector<harness::ExperimentSpec> specs;
    if (j.is_array()) {
        for (const auto& s : j) specs.push_back(spec_from_json(s));
    } else {
        specs.push_back(spec_from_json(j));
    }
    return specs;
}

json report_to_json(const harness::RpcfReport& report) {
    json j;
    j["spec"] = report.spec_name;
    j["direction"] = report.direction == harness::Direction::Fmp ? "fmp" : "fmt";
    j["rows"] = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["method"] = row.method;
        r["case"] = to_string(row.tag);
        r["rpcf"] = row.rpcf_pct;
        r["degenerate"] = row.degenerate;
        r["result"] = std::vector<double>(row.result.grades().data(),
                                          row.result.grades().data() + row.result.size());
        j["rows"].push_back(std::move(r));
    }
    j["averages"] = json::array();
    for (const auto& [method, avg] : report.method_averages) {
        j["averages"].push_back({{"method", method}, {"rpcf", avg}});
    }
    return j;
}

json comparison_to_json(const harness::ComparisonTable& table) {
    const auto row_json = [](const harness::ComparisonRow& r) {
        return json{{"method", r.method},
                    {"fmp_class1", r.fmp_class1}, {"fmp_class2", r.fmp_class2},
                    {"fmp_avg", r.fmp_avg()},
                    {"fmt_class1", r.fmt_class1}, {"fmt_class2", r.fmt_class2},
                    {"fmt_avg", r.fmt_avg()}, {"average", r.grand_avg()}};
    };
    json j;
    j["rows"] = json::array();
    for (const auto& r : table.rows) j["rows"].push_back(row_json(r));
    j["summary"] = json::array();
    for (const auto& r : table.family_summary) j["summary"].push_back(row_json(r));
    return j;
}

std::vector<std::string> split_selectors(const std::string& list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string::npos ? list.size() : comma;
        if (end > start) out.push_back(list.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

} // namespace fuzzlcm::io
