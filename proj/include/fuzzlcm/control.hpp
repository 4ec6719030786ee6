#pragma once

#include "fuzzlcm/baselines.hpp"
#include "fuzzlcm/fuzzy_set.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fuzzlcm::control {

/// First-order-plus-dead-time plant 1/(1+Ts) * exp(-tau s), discretized by
/// zero-order hold: y(k+1) = alpha y(k) + (1-alpha) u(k - tau/dt),
/// alpha = exp(-dt/T).
struct PlantParams {
    double time_constant = 20.0;
    double dead_time = 2.0;
    double sample_time = 1.0;
    double setpoint = 40.0;

    void validate() const;
    double alpha() const;
    int delay_steps() const;
};

class Plant {
public:
    explicit Plant(const PlantParams& params);
    double output() const { return y_; }
    /// Advances one sample with the given actuation; returns the new output.
    double step(double u);

private:
    PlantParams params_;
    double y_ = 0.0;
    std::vector<double> delay_line_;   // pending inputs, oldest first
};

enum class Fuzzifier { Singleton, Triangular };

/// Crisp value onto a universe grid. Singleton puts grade 1 at the nearest
/// point (ties to the lower index, out-of-range clamps to the endpoint);
/// Triangular spreads a unit triangle of the given half-width.
Array fuzzify(double value, const Array& universe, Fuzzifier kind,
              double half_width = 0.0);

enum class BackendKind { Relation, Lcm };

struct Backend {
    BackendKind kind = BackendKind::Relation;
    baselines::RelationKind relation = baselines::RelationKind::Rc;
    SignForm form = SignForm::ThreeValued;
    std::string name;
};

Backend parse_backend(const std::string& selector);   // "rel:rc", "lcm:p3", ...

struct Rule {
    int error_set = 0;    // indices into the partitions
    int delta_set = 0;
    int output_set = 0;
};

/// Complete grid rule base over triangular partitions of the error,
/// delta-error and increment universes.
struct RuleBase {
    Array error_universe, delta_universe, output_universe;
    std::vector<Array> error_sets, delta_sets, output_sets;
    std::vector<Rule> rules;

    void validate() const;
};

/// The standard anti-diagonal PD table: 5 sets per variable,
/// output index = clamp(e_index + de_index - 2).
RuleBase default_rule_base(double error_span = 40.0, double delta_span = 4.0,
                           double output_span = 4.0, int points = 17);

struct ControllerConfig {
    RuleBase rules;
    double rho = 1.0;
    Backend backend;
    Fuzzifier fuzzifier = Fuzzifier::Singleton;

    void validate() const;
};

/// Tuned defaults per backend: relation backends run singleton/rho 1;
/// the distance-based backend wants a triangular premise and a gentler gain.
ControllerConfig default_config(const Backend& backend);

/// Single inference step: fuzzify both inputs, fire every rule through the
/// backend, aggregate, defuzzify by center of gravity. An all-zero aggregate
/// yields increment 0 with the stall flag set.
struct Increment {
    double du = 0.0;
    bool stalled = false;
};

Increment infer_increment(const ControllerConfig& config, double error,
                          double delta_error);

/// Per-rule inferred output vectors for one input pair (used by the probe
/// and by tests; the closed loop only needs the aggregate).
std::vector<Array> per_rule_outputs(const ControllerConfig& config, double error,
                                    double delta_error);

struct TraceRow {
    int k = 0;
    double y = 0, e = 0, de = 0, du = 0, u = 0;
};

struct ControlTrace {
    std::vector<TraceRow> rows;
    int stalls = 0;
};

ControlTrace run_closed_loop(const PlantParams& plant,
                             const ControllerConfig& config, int steps);

struct ProbeRow {
    std::string backend;
    int distinct_outputs = 0;
    bool converging = false;
};

/// Sweeps singleton inputs over the error universe (delta fixed at zero),
/// collects per-rule output vectors, and classifies: a backend converges iff
/// some output value escapes the input-independent menu
/// {0, 1, b, 1-b, min(b,1-b)} at its position.
std::vector<ProbeRow> convergence_probe(const std::vector<Backend>& backends);
ProbeRow probe_backend(const Backend& backend);

void write_trace_csv(std::ostream& os, const ControlTrace& trace);
void write_probe_csv(std::ostream& os, const std::vector<ProbeRow>& rows);
void write_trace_svg(std::ostream& os, const ControlTrace& trace, double setpoint);

} // namespace fuzzlcm::control
