#include "fuzzlcm/control.hpp"
#include "fuzzlcm/json_io.hpp"
#include "fuzzlcm/rpcf.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace fuzzlcm;
namespace fs = std::filesystem;

std::ofstream open_out(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    const fs::path p = fs::path(dir) / name;
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
}

int cmd_infer(const std::string& input, const std::string& out_dir,
              const std::string& method) {
    const auto j = io::load_json_file(input);
    io::InferenceRequest req = io::request_from_json(j);

    SignForm form = req.form;
    if (!method.empty()) {
        const auto id = baselines::parse_method(method);
        if (id.family != baselines::MethodId::Family::Lcm) {
            throw std::invalid_argument("infer runs the lcm engine; use lcm:p3 or lcm:p2");
        }
        form = id.form;
    }
    const LcmInferenceResult r =
        req.direction == harness::Direction::Fmp
            ? fmp_lcm(req.antecedent, req.premise, req.consequent, req.tag, form, req.tilt)
            : fmt_lcm(req.consequent, req.premise, req.antecedent, req.tag, form, req.tilt);

    std::cout << harness::format_vector(r.result.grades()) << "\n";
    auto out = open_out(out_dir, "result.json");
    out << io::result_to_json(r).dump(2) << "\n";
    return 0;
}

int cmd_evaluate(const std::string& input, const std::string& out_dir,
                 const std::string& format, const std::string& method, bool check) {
    std::vector<harness::ExperimentSpec> specs;
    if (input.empty()) {
        specs = harness::bundled_specs();
    } else {
        specs = io::specs_from_json(io::load_json_file(input));
    }
    if (!method.empty()) {
        const auto selectors = io::split_selectors(method);
        for (auto& spec : specs) spec.methods = selectors;
    }

    for (const auto& spec : specs) {
        const auto report = harness::run_experiment(spec);
        if (format == "csv") {
            auto out = open_out(out_dir, spec.name + ".csv");
            harness::write_report_csv(out, report);
        } else if (format == "json") {
            auto out = open_out(out_dir, spec.name + ".json");
            out << io::report_to_json(report).dump(2) << "\n";
        }
        harness::write_report_table(std::cout, report);
        auto out = open_out(out_dir, spec.name + ".txt");
        harness::write_report_table(out, report);
        // wall-clock goes to stdout only; the emitted files stay byte-stable
        for (const auto& [method, avg] : report.method_averages) {
            double ms = 0.0;
            for (const auto& row : report.rows) {
                if (row.method == method) ms += row.elapsed_ms;
            }
            std::printf("  timing %-18s %.4f ms\n", method.c_str(), ms);
        }
    }

    if (check) {
        const auto outcome = harness::run_fixture_check();
        for (const auto& line : outcome.lines) std::cout << line << "\n";
        std::cout << "fixture check: " << outcome.hard_failures << " hard failure(s), "
                  << outcome.soft_deviations << " soft deviation(s)\n";
        return outcome.hard_failures == 0 ? 0 : 1;
    }
    return 0;
}

int cmd_compare(const std::string& input, const std::string& out_dir,
                const std::string& format, const std::string& method) {
    std::vector<harness::ExperimentSpec> specs;
    if (input.empty()) {
        for (auto& s : harness::bundled_specs()) {
            if (s.name.rfind("ramp-", 0) != 0) specs.push_back(std::move(s));
        }
    } else {
        specs = io::specs_from_json(io::load_json_file(input));
    }
    if (!method.empty()) {
        const auto selectors = io::split_selectors(method);
        for (auto& spec : specs) spec.methods = selectors;
    }
    const auto table = harness::compare_methods(specs);
    harness::write_comparison_table(std::cout, table);
    if (format == "csv") {
        auto out = open_out(out_dir, "comparison.csv");
        harness::write_comparison_csv(out, table);
    } else if (format == "json") {
        auto out = open_out(out_dir, "comparison.json");
        out << io::comparison_to_json(table).dump(2) << "\n";
    } else {
        auto out = open_out(out_dir, "comparison.txt");
        harness::write_comparison_table(out, table);
    }
    return 0;
}

int cmd_simulate(const std::string& out_dir, const std::string& method, int steps,
                 double rho, bool probe_only) {
    const std::vector<std::string> all = {"rel:rs", "rel:rg", "rel:rss", "rel:rsg",
                                          "rel:rgs", "rel:rgg", "rel:rc", "rel:rp",
                                          "rel:ra", "rel:rm", "lcm:p3"};
    std::vector<control::Backend> backends;
    if (method.empty()) {
        for (const auto& m : all) backends.push_back(control::parse_backend(m));
    } else {
        std::size_t start = 0;
        while (start <= method.size()) {
            const auto comma = method.find(',', start);
            const auto end = comma == std::string::npos ? method.size() : comma;
            if (end > start) {
                backends.push_back(control::parse_backend(method.substr(start, end - start)));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    const auto probe = control::convergence_probe(backends);
    control::write_probe_csv(std::cout, probe);
    {
        auto out = open_out(out_dir, "probe.csv");
        control::write_probe_csv(out, probe);
    }
    if (probe_only) return 0;

    control::PlantParams plant;
    for (const auto& backend : backends) {
        control::ControllerConfig cfg = control::default_config(backend);
        if (rho > 0) cfg.rho = rho;
        const auto trace = control::run_closed_loop(plant, cfg, steps);
        const std::string stem = "trace-" + backend.name;
        std::string safe = stem;
        for (auto& ch : safe) {
            if (ch == ':') ch = '-';
        }
        {
            auto out = open_out(out_dir, safe + ".csv");
            control::write_trace_csv(out, trace);
        }
        {
            auto out = open_out(out_dir, safe + ".svg");
            control::write_trace_svg(out, trace, plant.setpoint);
        }
        const auto& last = trace.rows.back();
        std::printf("%-8s steps=%d final y=%.3f |e|=%.3f stalls=%d\n", backend.name.c_str(),
                    steps, last.y, std::abs(plant.setpoint - last.y), trace.stalls);
    }
    return 0;
}

int cmd_bench(int repeat) {
    using clock = std::chrono::steady_clock;
    const auto spec = harness::bundled_spec("fmp-class1");
    std::printf("%-18s %12s\n", "method", "mean_ms");
    for (const auto& method : spec.methods) {
        harness::ExperimentSpec one = spec;
        one.methods = {method};
        const auto t0 = clock::now();
        for (int i = 0; i < repeat; ++i) {
            const auto rep = harness::run_experiment(one);
            (void)rep;
        }
        const auto t1 = clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count() / repeat;
        std::printf("%-18s %12.4f\n", method.c_str(), ms);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-measure fuzzy reasoning toolkit"};
    app.require_subcommand(1);

    std::string input, out_dir = "out", method, format = "table";
    bool check = false, probe_only = false;
    int steps = 300, repeat = 10;
    double rho = 0.0;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--format", format, "csv|table|json")
            ->check(CLI::IsMember({"csv", "table", "json"}));
    };

    auto* infer = app.add_subcommand("infer", "run a single inference request");
    add_common(infer, true);
    infer->add_option("--method", method, "lcm:p3 or lcm:p2");

    auto* evaluate = app.add_subcommand("evaluate", "run experiment specs and score them");
    add_common(evaluate, false);
    evaluate->add_option("--method", method, "override the spec method list (comma separated)");
    evaluate->add_flag("--check", check, "diff against the pinned reference values");

    auto* compare = app.add_subcommand("compare", "cross-method comparison table");
    add_common(compare, false);
    compare->add_option("--method", method, "override the spec method list (comma separated)");

    auto* simulate = app.add_subcommand("simulate", "closed-loop run and convergence probe");
    simulate->add_option("--out", out_dir, "output directory");
    simulate->add_option("--method", method, "backend selector (rel:<kind> | lcm:<form>)");
    simulate->add_option("--steps", steps, "simulation steps");
    simulate->add_option("--rho", rho, "gain override");
    simulate->add_flag("--probe-only", probe_only, "skip the closed-loop run");

    auto* bench = app.add_subcommand("bench", "wall-clock per method");
    bench->add_option("--repeat", repeat, "repetitions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (infer->parsed()) return cmd_infer(input, out_dir, method);
        if (evaluate->parsed()) return cmd_evaluate(input, out_dir, format, method, check);
        if (compare->parsed()) return cmd_compare(input, out_dir, format, method);
        if (simulate->parsed()) return cmd_simulate(out_dir, method, steps, rho, probe_only);
        if (bench->parsed()) return cmd_bench(repeat);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
