#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "fuzzlcm/json_io.hpp"
#include "fuzzlcm/rpcf.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

using namespace fuzzlcm;
using namespace fuzzlcm::harness;
using testutil::arr;
using testutil::check_close;
using testutil::set;

TEST_CASE("criterion function") {
    const auto b = set({0, 0, 0, 0, 0, 0.3, 1});
    CHECK(rpcf(b, b) == doctest::Approx(100.0));
    CHECK(rpcf(set({0.072, 0, 0, 0, 0.072, 0.35, 1}), set({0, 0, 0, 0, 0, 0.09, 1})) ==
          testutil::near(94.23, 0.005));
    CHECK(rpcf(set({0, 0.087, 0.337, 0.587, 1}),
               set({0, 0.0625, 0.25, 0.5625, 1})) == testutil::near(97.28, 0.005));
    CHECK_THROWS_AS(rpcf(b, set({0, 1})), std::invalid_argument);
}

TEST_CASE("criterion is 100 exactly when the vectors coincide") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const FuzzySetVector p(testutil::random_grades(rng, 6, false));
        FuzzySetVector q(testutil::random_grades(rng, 6, false));
        CHECK(rpcf(p, p) == 100.0);
        if (!(p == q)) CHECK(rpcf(p, q) < 100.0);

        // permuting both vectors together leaves the score unchanged
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        Array pp(6), qq(6);
        for (int i = 0; i < 6; ++i) {
            pp[i] = p[perm[i]];
            qq[i] = q[perm[i]];
        }
        CHECK(rpcf(FuzzySetVector(pp), FuzzySetVector(qq)) ==
              testutil::near(rpcf(p, q), 1e-12));
    }
}

TEST_CASE("expected targets") {
    const auto a = set({1, 0.3, 0, 0, 0});
    const auto b = set({0, 0, 0, 0, 0, 0.3, 1});
    check_close(expected_target(CaseTag::Case1, a, b).grades(), b.grades(), 0);
    check_close(expected_target(CaseTag::Case2, a, b).grades(),
                arr({0, 0, 0, 0, 0, 0.09, 1}), 1e-15);
    check_close(expected_target(CaseTag::Case7, set({1, 0.3, 0, 0, 0}), b).grades(),
                arr({0, 0.91, 1, 1, 1}), 1e-15);
    CHECK_THROWS_AS(expected_target(CaseTag::Case5, a, b), std::invalid_argument);

    check_close(case_premise(CaseTag::Case3, a, b).grades(),
                arr({1, std::sqrt(0.3), 0, 0, 0}), 1e-15);
    check_close(case_premise(CaseTag::Case8, a, b).grades(),
                arr({1, 1, 1, 1, 1, 1 - std::sqrt(0.3), 0}), 1e-15);
}

TEST_CASE("first bundled experiment reproduces the reference values") {
    auto spec = bundled_spec("fmp-class1");
    spec.methods = {"lcm:p3", "lcm:p2"};
    const auto report = run_experiment(spec);

    const double expected_p3[] = {100.0, 94.24, 92.56, 63.53};
    int row = 0;
    for (const auto& r : report.rows) {
        if (r.method != "lcm:p3") continue;
        CHECK(r.rpcf_pct == testutil::near(expected_p3[row], 0.2));
        ++row;
    }
    CHECK(row == 4);
    CHECK(report.average_for("lcm:p3") == testutil::near(87.58, 0.2));
    CHECK(report.average_for("lcm:p2") == testutil::near(87.96, 0.2));
}

TEST_CASE("second bundled experiment hits the tilted-premise averages") {
    auto spec = bundled_spec("fmp-class2");
    spec.methods = {"lcm:p3", "lcm:p2"};
    const auto report = run_experiment(spec);
    CHECK(report.average_for("lcm:p3") == testutil::near(96.35, 0.1));
    CHECK(report.average_for("lcm:p2") == testutil::near(96.39, 0.1));
}

TEST_CASE("a single reductive case scores a clean hundred") {
    ExperimentSpec spec{"identity", set({1, 0.5, 0}), set({0, 0.5, 1}),
                        Direction::Fmp, ClassTag::Class1,
                        {{CaseTag::Case1, {}, {}, {}}},
                        {"lcm:p3"}};
    const auto report = run_experiment(spec);
    CHECK(report.average_for("lcm:p3") == doctest::Approx(100.0));
}

TEST_CASE("class averages equal the mean of their case scores") {
    for (const auto& spec : bundled_specs()) {
        const auto report = run_experiment(spec);
        for (const auto& [method, avg] : report.method_averages) {
            double sum = 0;
            int count = 0;
            for (const auto& row : report.rows) {
                if (row.method == method) {
                    sum += row.rpcf_pct;
                    ++count;
                }
            }
            CHECK(avg == testutil::near(sum / count, 0.005));
        }
    }
}

TEST_CASE("cross-method comparison composes the published summary") {
    std::vector<ExperimentSpec> specs;
    for (auto& s : bundled_specs()) {
        if (s.name.rfind("ramp-", 0) != 0) specs.push_back(std::move(s));
    }
    const auto table = compare_methods(specs);
    CHECK(table.rows.size() == 16);

    const auto& lcm3 = table.rows.front();
    CHECK(lcm3.method == "lcm:p3");
    CHECK(lcm3.fmp_class1 == testutil::near(87.58, 0.2));
    CHECK(lcm3.fmt_class1 == testutil::near(88.88, 0.5));

    bool found = false;
    for (const auto& fam : table.family_summary) {
        if (fam.method != "lcm") continue;
        found = true;
        CHECK(fam.fmp_avg() == testutil::near(92.07, 0.2));
        CHECK(fam.fmt_avg() == testutil::near(89.05, 0.2));
        CHECK(fam.grand_avg() == testutil::near(90.56, 0.2));
    }
    CHECK(found);

    // single-spec, single-method table reduces to the experiment average
    auto one = bundled_spec("fmp-class1");
    one.methods = {"lcm:p3"};
    const auto small = compare_methods({one});
    CHECK(small.rows.size() == 1);
    CHECK(small.rows[0].fmp_class1 ==
          testutil::near(run_experiment(one).average_for("lcm:p3"), 1e-12));
}

TEST_CASE("duplicate experiment names are rejected") {
    auto one = bundled_spec("fmp-class1");
    one.methods = {"lcm:p3"};
    CHECK_THROWS_AS(compare_methods({one, one}), std::invalid_argument);
}

TEST_CASE("fixture check passes its hard cells") {
    const auto outcome = run_fixture_check();
    CHECK(outcome.hard_failures == 0);
}

TEST_CASE("csv output is deterministic") {
    const auto spec = bundled_spec("ramp-fmp");
    std::ostringstream a, b;
    write_report_csv(a, run_experiment(spec));
    write_report_csv(b, run_experiment(spec));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("ramp-fmp,lcm:p3,case1,100.00") != std::string::npos);
}

TEST_CASE("experiment specs load from json") {
    const auto j = nlohmann::json::parse(R"({
        "name": "demo",
        "antecedent": [1, 0.3, 0, 0, 0],
        "consequent": {"grades": [0, 0, 0, 0, 0, 0.3, 1]},
        "direction": "fmp",
        "class": "class2",
        "cases": [
            {"case": "case1"},
            {"case": "case5", "tilt_premise": [1, 0.2, 0, 0, 0],
             "tilt_target": [0, 0, 0, 0, 0, 0.2, 1]}
        ],
        "methods": ["lcm:p3"]
    })");
    const auto spec = io::spec_from_json(j);
    CHECK(spec.cls == ClassTag::Class2);
    CHECK(spec.cases.size() == 2);
    const auto report = run_experiment(spec);
    CHECK(report.rows.size() == 2);
    CHECK(report.rows[1].rpcf_pct == testutil::near(98.58, 0.2));

    auto bad = j;
    bad["antecedent"][0] = 1.5;
    CHECK_THROWS(io::spec_from_json(bad));
}

TEST_CASE("case tags must match the experiment direction") {
    ExperimentSpec spec{"bad", set({1, 0.5, 0}), set({0, 0.5, 1}),
                        Direction::Fmp, ClassTag::Class1,
                        {{CaseTag::Case6, {}, {}, {}}},
                        {"lcm:p3"}};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
    spec.cases = {{CaseTag::Case1, {}, {}, {}}};
    spec.methods = {};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);

    // the tilted case belongs to class 2, the not-premise case to class 1
    spec.methods = {"lcm:p3"};
    spec.cases = {{CaseTag::Case5, {}, set({1, 0.5, 0}), set({0, 0.5, 1})}};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
    spec.cls = ClassTag::Class2;
    spec.cases = {{CaseTag::Case4, {}, {}, {}}};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);
}

TEST_CASE("reverse inference requests run end to end") {
    const auto j = nlohmann::json::parse(R"({
        "rule": {"antecedent": [1, 0.8, 0.4, 0], "consequent": [0, 0.2, 0.4, 0.7, 0.9, 1]},
        "premise": [1, 0.9, 0.8, 0.3, 0.1, 0],
        "direction": "fmt",
        "case": "case6",
        "form": "p3"
    })");
    const auto req = io::request_from_json(j);
    const auto r = fmt_lcm(req.consequent, req.premise, req.antecedent, req.tag, req.form);
    check_close(r.result.grades(), arr({0, 0.2184, 0.5632, 1}), 5e-4);
}

TEST_CASE("sets with universes survive the json round trip") {
    const FuzzySetVector s(arr({0.0, 0.5, 1.0}), arr({-2.0, 0.0, 3.0}));
    const auto j = io::set_to_json(s);
    const auto back = io::set_from_json(j, "set");
    CHECK(back == s);
    REQUIRE(back.universe().has_value());
    check_close(*back.universe(), *s.universe(), 0);

    auto bad = j;
    bad["universe"] = {3.0, 0.0, -2.0};
    CHECK_THROWS_AS(io::set_from_json(bad, "set"), std::invalid_argument);
}

TEST_CASE("inference requests round-trip through json") {
    const auto j = nlohmann::json::parse(R"({
        "rule": {"antecedent": [1, 0.8, 0.4, 0], "consequent": [0, 0.2, 0.4, 0.7, 0.9, 1]},
        "premise": [1, 0.9, 0.3, 0],
        "direction": "fmp",
        "case": "case1",
        "form": "p3"
    })");
    const auto req = io::request_from_json(j);
    const auto r = fmp_lcm(req.antecedent, req.premise, req.consequent, req.tag, req.form);
    const auto out = io::result_to_json(r);
    CHECK(out.at("result").size() == 6);
    CHECK(out.at("distance").get<double>() == testutil::near(0.0527, 5e-5));
    CHECK_FALSE(out.at("degenerate").get<bool>());

    auto bad = j;
    bad["premise"][2] = -0.2;
    CHECK_THROWS_AS(io::request_from_json(bad), std::invalid_argument);
    try {
        io::request_from_json(bad);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("premise") != std::string::npos);
    }
}
