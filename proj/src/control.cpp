#include "fuzzlcm/control.hpp"

#include "fuzzlcm/lcm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace fuzzlcm::control {

void PlantParams::validate() const {
    if (time_constant <= 0) throw std::invalid_argument("time constant must be positive");
    if (dead_time < 0) throw std::invalid_argument("dead time must be non-negative");
    if (sample_time <= 0) throw std::invalid_argument("sample time must be positive");
    const double ratio = dead_time / sample_time;
    if (std::abs(ratio - std::round(ratio)) > 1e-9) {
        throw std::invalid_argument("dead time must be an integer multiple of the sample time");
    }
}

double PlantParams::alpha() const { return std::exp(-sample_time / time_constant); }

int PlantParams::delay_steps() const {
    return static_cast<int>(std::round(dead_time / sample_time));
}

Plant::Plant(const PlantParams& params) : params_(params) {
    params_.validate();
    delay_line_.assign(params_.delay_steps(), 0.0);   // rest before start
}

double Plant::step(double u) {
    double delayed = u;
    if (!delay_line_.empty()) {
        delayed = delay_line_.front();
        delay_line_.erase(delay_line_.begin());
        delay_line_.push_back(u);
    }
    const double a = params_.alpha();
    y_ = a * y_ + (1.0 - a) * delayed;
    return y_;
}

Array fuzzify(double value, const Array& universe, Fuzzifier kind, double half_width) {
    if (kind == Fuzzifier::Singleton) {
        Array out = Array::Zero(universe.size());
        Eigen::Index best = 0;
        double best_dist = std::abs(universe[0] - value);
        for (Eigen::Index i = 1; i < universe.size(); ++i) {
            const double d = std::abs(universe[i] - value);
            if (d < best_dist - 1e-15) {   // ties keep the lower index
                best_dist = d;
                best = i;
            }
        }
        out[best] = 1.0;
        return out;
    }
    if (half_width <= 0) {
        half_width = (universe[universe.size() - 1] - universe[0]) / 4.0;
    }
    const double x = std::clamp(value, universe[0], universe[universe.size() - 1]);
    return (1.0 - (universe - x).abs() / half_width).max(0.0);
}

Backend parse_backend(const std::string& selector) {
    Backend b;
    b.name = selector;
    if (selector.rfind("lcm:", 0) == 0) {
        b.kind = BackendKind::Lcm;
        b.form = parse_sign_form(selector.substr(4));
        return b;
    }
    if (selector.rfind("rel:", 0) == 0) {
        b.kind = BackendKind::Relation;
        b.relation = baselines::parse_relation(selector.substr(4));
        return b;
    }
    throw std::invalid_argument("backend selector must be rel:<kind> or lcm:<form>, got " +
                                selector);
}

namespace {

std::vector<Array> triangular_partition(const Array& universe, int sets) {
    const double lo = universe[0];
    const double hi = universe[universe.size() - 1];
    const double half = (hi - lo) / (sets - 1);
    std::vector<Array> out;
    out.reserve(sets);
    for (int s = 0; s < sets; ++s) {
        const double center = lo + half * s;
        out.push_back((1.0 - (universe - center).abs() / half).max(0.0));
    }
    return out;
}

} // namespace

void RuleBase::validate() const {
    if (rules.empty()) throw std::invalid_argument("rule base is empty");
    std::set<std::pair<int, int>> seen;
    for (const auto& r : rules) {
        if (r.error_set < 0 || r.error_set >= static_cast<int>(error_sets.size()) ||
            r.delta_set < 0 || r.delta_set >= static_cast<int>(delta_sets.size()) ||
            r.output_set < 0 || r.output_set >= static_cast<int>(output_sets.size())) {
            throw std::invalid_argument("rule references a missing partition set");
        }
        seen.emplace(r.error_set, r.delta_set);
    }
    if (seen.size() != error_sets.size() * delta_sets.size()) {
        throw std::invalid_argument("rule grid is incomplete");
    }
}

RuleBase default_rule_base(double error_span, double delta_span, double output_span,
                           int points) {
    RuleBase rb;
    rb.error_universe = Array::LinSpaced(points, -error_span, error_span);
    rb.delta_universe = Array::LinSpaced(points, -delta_span, delta_span);
    rb.output_universe = Array::LinSpaced(points, -output_span, output_span);
    rb.error_sets = triangular_partition(rb.error_universe, 5);
    rb.delta_sets = triangular_partition(rb.delta_universe, 5);
    rb.output_sets = triangular_partition(rb.output_universe, 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            rb.rules.push_back(Rule{i, j, std::clamp(i + j - 2, 0, 4)});
        }
    }
    return rb;
}

void ControllerConfig::validate() const {
    if (rho <= 0) throw std::invalid_argument("rho must be positive");
    rules.validate();
}

ControllerConfig default_config(const Backend& backend) {
    ControllerConfig cfg;
    cfg.rules = default_rule_base();
    cfg.backend = backend;
    if (backend.kind == BackendKind::Lcm) {
        // a spike premise starves the distance measure; feed it the same
        // triangular family the antecedents use, with a gentler gain
        cfg.fuzzifier = Fuzzifier::Triangular;
        cfg.rho = 0.5;
    }
    return cfg;
}

namespace {

double matching_degree(const Array& fuzzed, const Array& set) {
    return fuzzed.min(set).maxCoeff();
}

Array relation_rule_output(baselines::RelationKind kind, double h, const Array& b) {
    using baselines::RelationKind;
    if (kind == RelationKind::Rm) {
        // control form of the max-min relation
        return b.min(std::min(h, 1.0 - h));
    }
    Array out(b.size());
    for (Eigen::Index j = 0; j < b.size(); ++j) {
        out[j] = baselines::relation_entry(kind, h, b[j]);
    }
    return out;
}

struct RuleEval {
    Array output;
    double distance = 0.0;   // Lcm backend only
};

std::vector<RuleEval> evaluate_rules(const ControllerConfig& config, double error,
                                     double delta_error) {
    const RuleBase& rb = config.rules;
    const double half_e = (rb.error_universe[rb.error_universe.size() - 1] -
                           rb.error_universe[0]) / 4.0;
    const double half_d = (rb.delta_universe[rb.delta_universe.size() - 1] -
                           rb.delta_universe[0]) / 4.0;
    const Array fe = fuzzify(error, rb.error_universe, config.fuzzifier, half_e);
    const Array fd = fuzzify(delta_error, rb.delta_universe, config.fuzzifier, half_d);

    std::vector<RuleEval> evals;
    evals.reserve(rb.rules.size());
    for (const auto& rule : rb.rules) {
        const Array& ae = rb.error_sets[rule.error_set];
        const Array& ad = rb.delta_sets[rule.delta_set];
        const Array& b = rb.output_sets[rule.output_set];
        if (config.backend.kind == BackendKind::Lcm) {
            Array ante(ae.size() + ad.size());
            ante << ae, ad;
            Array prem(fe.size() + fd.size());
            prem << fe, fd;
            const auto r = fmp_lcm(FuzzySetVector(ante), FuzzySetVector(prem),
                                   FuzzySetVector(b), CaseTag::Case1,
                                   config.backend.form);
            evals.push_back(RuleEval{r.result.grades(), r.distance});
        } else {
            const double h = std::min(matching_degree(fe, ae), matching_degree(fd, ad));
            evals.push_back(RuleEval{relation_rule_output(config.backend.relation, h, b), 0.0});
        }
    }
    return evals;
}

double centroid(const Array& memberships, const Array& universe, bool* stalled) {
    const double mass = memberships.sum();
    if (mass <= 1e-12) {
        if (stalled) *stalled = true;
        return 0.0;
    }
    return (memberships * universe).sum() / mass;
}

} // namespace

std::vector<Array> per_rule_outputs(const ControllerConfig& config, double error,
                                    double delta_error) {
    std::vector<Array> outputs;
    for (auto& ev : evaluate_rules(config, error, delta_error)) {
        outputs.push_back(std::move(ev.output));
    }
    return outputs;
}

Increment infer_increment(const ControllerConfig& config, double error,
                          double delta_error) {
    const auto evals = evaluate_rules(config, error, delta_error);
    Increment inc;
    if (config.backend.kind == BackendKind::Lcm) {
        // the closest rule wins; exact antecedent match reduces to that
        // rule's consequent and hence to its centroid
        std::size_t best = 0;
        for (std::size_t i = 1; i < evals.size(); ++i) {
            if (evals[i].distance < evals[best].distance) best = i;
        }
        inc.du = centroid(evals[best].output, config.rules.output_universe, &inc.stalled);
        return inc;
    }
    Array agg = Array::Zero(config.rules.output_universe.size());
    for (const auto& ev : evals) agg = agg.max(ev.output);
    inc.du = centroid(agg, config.rules.output_universe, &inc.stalled);
    return inc;
}

ControlTrace run_closed_loop(const PlantParams& plant_params,
                             const ControllerConfig& config, int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    config.validate();
    Plant plant(plant_params);

    ControlTrace trace;
    trace.rows.reserve(steps);
    double u = 0.0;
    double y_prev = plant.output();
    for (int k = 0; k < steps; ++k) {
        const double y = plant.output();
        const double e = plant_params.setpoint - y;
        const double de = y_prev - y;
        const Increment inc = infer_increment(config, e, de);
        if (inc.stalled) ++trace.stalls;
        u += config.rho * inc.du;
        if (!std::isfinite(u) || !std::isfinite(y)) {
            throw std::runtime_error("closed loop diverged at step " + std::to_string(k));
        }
        trace.rows.push_back(TraceRow{k, y, e, de, inc.du, u});
        y_prev = y;
        plant.step(u);
    }
    return trace;
}

namespace {

bool value_in_menu(double v, double b) {
    const double menu[] = {0.0, 1.0, b, 1.0 - b, std::min(b, 1.0 - b)};
    for (double m : menu) {
        if (std::abs(v - m) <= 1e-9) return true;
    }
    return false;
}

} // namespace

ProbeRow probe_backend(const Backend& backend) {
    ControllerConfig cfg = default_config(backend);
    cfg.fuzzifier = Fuzzifier::Singleton;   // the sweep feeds crisp points

    const RuleBase& rb = cfg.rules;
    std::set<std::vector<long long>> distinct;
    bool converging = false;
    for (Eigen::Index p = 0; p < rb.error_universe.size(); ++p) {
        const auto outputs = per_rule_outputs(cfg, rb.error_universe[p], 0.0);
        for (std::size_t r = 0; r < outputs.size(); ++r) {
            const Array& out = outputs[r];
            const Array& b = rb.output_sets[rb.rules[r].output_set];
            std::vector<long long> key;
            key.reserve(out.size() + 1);
            key.push_back(static_cast<long long>(r));
            for (Eigen::Index j = 0; j < out.size(); ++j) {
                key.push_back(std::llround(out[j] * 1e9));
                if (!value_in_menu(out[j], b[j])) converging = true;
            }
            distinct.insert(std::move(key));
        }
    }
    return ProbeRow{backend.name, static_cast<int>(distinct.size()), converging};
}

std::vector<ProbeRow> convergence_probe(const std::vector<Backend>& backends) {
    std::vector<ProbeRow> rows;
    rows.reserve(backends.size());
    for (const auto& b : backends) rows.push_back(probe_backend(b));
    return rows;
}

void write_trace_csv(std::ostream& os, const ControlTrace& trace) {
    os << "k,y,e,de,du,u\n";
    char buf[160];
    for (const auto& r : trace.rows) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.k, r.y, r.e,
                      r.de, r.du, r.u);
        os << buf;
    }
}

void write_probe_csv(std::ostream& os, const std::vector<ProbeRow>& rows) {
    os << "backend,distinct_outputs,classification\n";
    for (const auto& r : rows) {
        os << r.backend << ',' << r.distinct_outputs << ','
           << (r.converging ? "converging" : "non-converging") << '\n';
    }
}

void write_trace_svg(std::ostream& os, const ControlTrace& trace, double setpoint) {
    const int w = 720, h = 360, pad = 40;
    double ymax = setpoint;
    for (const auto& r : trace.rows) ymax = std::max(ymax, r.y);
    ymax *= 1.1;
    if (ymax <= 0) ymax = 1.0;
    const auto X = [&](int k) {
        return pad + (w - 2.0 * pad) * k / std::max<std::size_t>(1, trace.rows.size() - 1);
    };
    const auto Y = [&](double y) { return h - pad - (h - 2.0 * pad) * y / ymax; };

    char buf[160];
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1='%d' y1='%.1f' x2='%d' y2='%.1f' stroke='gray' stroke-dasharray='4'/>\n",
                  pad, Y(setpoint), w - pad, Y(setpoint));
    os << buf;
    os << "<polyline fill='none' stroke='steelblue' stroke-width='1.5' points='";
    for (const auto& r : trace.rows) {
        std::snprintf(buf, sizeof buf, "%.1f,%.1f ", X(r.k), Y(r.y));
        os << buf;
    }
    os << "'/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x='%d' y='%.1f' font-size='12' fill='gray'>setpoint %.1f</text>\n",
                  pad + 4, Y(setpoint) - 6, setpoint);
    os << buf;
    os << "</svg>\n";
}

} // namespace fuzzlcm::control
