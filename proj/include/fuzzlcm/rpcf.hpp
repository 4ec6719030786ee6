#pragma once

#include "fuzzlcm/baselines.hpp"
#include "fuzzlcm/fuzzy_set.hpp"
#include "fuzzlcm/lcm.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fuzzlcm::harness {

/// Reductive-property criterion: (1 - mean |result - target|) * 100.
/// The divisor is the compared vectors' length.
double rpcf(const FuzzySetVector& result, const FuzzySetVector& target);

/// The vector a perfectly reductive method should return for each case.
/// Forward cases hedge the consequent (B, B^2, B^1/2, 1-B, tilted B);
/// reverse cases hedge the antecedent before complementing
/// (1-A, 1-A^2, 1-A^1/2, A, tilted A).
FuzzySetVector expected_target(CaseTag tag, const FuzzySetVector& a,
                               const FuzzySetVector& b,
                               const std::optional<FuzzySetVector>& tilt = {});

/// Premise the case generates from the rule sides (hedge applied to A for
/// forward cases, to B with complement for reverse ones).
FuzzySetVector case_premise(CaseTag tag, const FuzzySetVector& a,
                            const FuzzySetVector& b,
                            const std::optional<FuzzySetVector>& tilt = {});

enum class Direction { Fmp, Fmt };
enum class ClassTag { Class1, Class2 };

struct CaseSpec {
    CaseTag tag;
    std::optional<CaseTag> branch;              // stage-5 branch override
    std::optional<FuzzySetVector> tilt_premise; // Case5/Case10
    std::optional<FuzzySetVector> tilt_target;
};

struct ExperimentSpec {
    std::string name;
    FuzzySetVector antecedent;
    FuzzySetVector consequent;
    Direction direction = Direction::Fmp;
    ClassTag cls = ClassTag::Class1;
    std::vector<CaseSpec> cases;
    std::vector<std::string> methods;
};

struct CaseResult {
    std::string method;
    CaseTag tag;
    FuzzySetVector premise;
    FuzzySetVector result;
    FuzzySetVector target;
    double rpcf_pct = 0.0;
    bool degenerate = false;
    double elapsed_ms = 0.0;
};

struct RpcfReport {
    std::string spec_name;
    Direction direction = Direction::Fmp;
    std::vector<CaseResult> rows;            // ordered by method, then case
    std::vector<std::pair<std::string, double>> method_averages;

    double average_for(const std::string& method) const;
};

RpcfReport run_experiment(const ExperimentSpec& spec);

/// One row of the cross-method comparison: per-direction averages over the
/// class experiments plus their mean.
struct ComparisonRow {
    std::string method;
    double fmp_class1 = 0, fmp_class2 = 0;
    double fmt_class1 = 0, fmt_class2 = 0;
    double fmp_avg() const { return (fmp_class1 + fmp_class2) / 2.0; }
    double fmt_avg() const { return (fmt_class1 + fmt_class2) / 2.0; }
    double grand_avg() const { return (fmp_avg() + fmt_avg()) / 2.0; }
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;                 // one per selector
    std::vector<ComparisonRow> family_summary;       // grouped by family
};

/// Expects the four class experiments (fmp/fmt x class1/class2); any number
/// of method selectors. Reduces to run_experiment output for a single spec.
ComparisonTable compare_methods(const std::vector<ExperimentSpec>& specs);

// ---------------------------------------------------------------------------
// Bundled experiments and their pinned reference values.

std::vector<ExperimentSpec> bundled_specs();
ExperimentSpec bundled_spec(const std::string& name);

struct FixtureCell {
    std::string spec;       // bundled spec name
    std::string method;
    std::string label;      // "case2" / "average" / ...
    double expected = 0;
    double tolerance = 0;
    bool hard = true;       // soft cells are reported, never failed
};

std::vector<FixtureCell> bundled_fixtures();

struct CheckOutcome {
    int hard_failures = 0;
    int soft_deviations = 0;
    std::vector<std::string> lines;
};

/// Runs every bundled fixture cell and diffs against its pinned value.
CheckOutcome run_fixture_check();

// ---------------------------------------------------------------------------
// Rendering. CSV is byte-stable: fixed ordering, fixed decimals
// (vectors 4, percentages 2).

void write_report_csv(std::ostream& os, const RpcfReport& report);
void write_report_table(std::ostream& os, const RpcfReport& report);
void write_comparison_csv(std::ostream& os, const ComparisonTable& table);
void write_comparison_table(std::ostream& os, const ComparisonTable& table);

std::string format_vector(const Array& v, int decimals = 4);

} // namespace fuzzlcm::harness
