#pragma once

#include "fuzzlcm/fuzzy_set.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fuzzlcm {

/// Sign vector convention for the distance direction.
/// ThreeValued maps dif>0 -> +1, dif=0 -> 0, dif<0 -> -1 (the P(+1,0,-1) form);
/// TwoValued maps dif>=0 -> +1, dif<0 -> -1 (the P(+1,-1) form).
enum class SignForm { ThreeValued, TwoValued };

/// Premise/criterion case. Case1..Case5 drive forward inference,
/// Case6..Case10 the reverse one; the tag selects the quasi-result branch.
enum class CaseTag {
    Case1, Case2, Case3, Case4, Case5,
    Case6, Case7, Case8, Case9, Case10
};

bool is_fmp_case(CaseTag tag);
CaseTag parse_case(const std::string& name);   // "case1".."case10"
std::string to_string(CaseTag tag);
SignForm parse_sign_form(const std::string& name);   // "p3" | "p2"
std::string to_string(SignForm form);

/// A grade vector resampled onto the common length theta = lcm(u, v).
/// Original grade k sits at 1-based index k*stride; entries between anchors
/// are linear interpolations, entries before the first anchor repeat the
/// first grade. Values may leave [0,1] only through later quasi arithmetic.
struct ExtendedVector {
    Array values;
    int theta = 0;
    int stride = 0;
};

/// Largest accepted common length; larger lcm(u, v) is rejected.
inline constexpr std::int64_t kMaxTheta = 1'000'000;

int common_length(Eigen::Index u, Eigen::Index v);   // lcm with the cap check

ExtendedVector lcm_extend(const FuzzySetVector& set, int theta);
ExtendedVector lcm_extend(const Array& values, int theta);

/// Inverse of the anchor placement: picks every stride-th entry.
Array select_anchors(const Array& values, int stride);

double lcm_distance(const ExtendedVector& a, const ExtendedVector& b);

Array sign_vector(const Array& dif, SignForm form);

struct Normalized {
    FuzzySetVector set;
    bool degenerate = false;   // max - min below tolerance; values clamped
};

/// Min-max rescale (x - min)/(max - min). Output spans [0,1] exactly unless
/// the input is constant, in which case it is clamped and flagged.
Normalized normalize(const Array& quasi);

struct LcmInferenceResult {
    FuzzySetVector result;   // consequent-length vector, grades in [0,1]
    double distance = 0.0;   // the extended-grid RMS distance
    Array signs;             // sign vector on the extended grid
    Array quasi;             // pre-normalization anchor values
    bool degenerate = false;
};

/// Forward inference over vectors of (possibly) unequal dimensions:
/// extend antecedent/premise/consequent to lcm length, shift the extended
/// consequent by distance-times-signs, select anchors, min-max rescale.
/// `tilt` supplies the replacement consequent for Case5.
LcmInferenceResult fmp_lcm(const FuzzySetVector& antecedent,
                           const FuzzySetVector& premise,
                           const FuzzySetVector& consequent,
                           CaseTag tag, SignForm form,
                           const std::optional<FuzzySetVector>& tilt = {});

/// Reverse inference: works on the complement side. The premise is compared
/// against 1-B; the branch shifts 1-A (Case6..8), A (Case9) or the supplied
/// tilted A (Case10).
LcmInferenceResult fmt_lcm(const FuzzySetVector& consequent_b,
                           const FuzzySetVector& premise_bstar,
                           const FuzzySetVector& antecedent_a,
                           CaseTag tag, SignForm form,
                           const std::optional<FuzzySetVector>& tilt = {});

} // namespace fuzzlcm
