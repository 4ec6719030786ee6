#include "fuzzlcm/lcm.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fuzzlcm {

namespace {

constexpr double kDegenerateTol = 1e-12;

Array clamp01(const Array& v) {
    return v.max(0.0).min(1.0);
}

} // namespace

bool is_fmp_case(CaseTag tag) {
    return tag <= CaseTag::Case5;
}

CaseTag parse_case(const std::string& name) {
    static const std::pair<const char*, CaseTag> table[] = {
        {"case1", CaseTag::Case1}, {"case2", CaseTag::Case2}, {"case3", CaseTag::Case3},
        {"case4", CaseTag::Case4}, {"case5", CaseTag::Case5}, {"case6", CaseTag::Case6},
        {"case7", CaseTag::Case7}, {"case8", CaseTag::Case8}, {"case9", CaseTag::Case9},
        {"case10", CaseTag::Case10}};
    for (const auto& [n, t] : table) {
        if (name == n) return t;
    }
    throw std::invalid_argument("unknown case tag: " + name);
}

std::string to_string(CaseTag tag) {
    const int idx = static_cast<int>(tag);
    return "case" + std::to_string(idx + 1);
}

SignForm parse_sign_form(const std::string& name) {
    if (name == "p3") return SignForm::ThreeValued;
    if (name == "p2") return SignForm::TwoValued;
    throw std::invalid_argument("sign form must be p3 or p2, got " + name);
}

std::string to_string(SignForm form) {
    return form == SignForm::ThreeValued ? "p3" : "p2";
}

int common_length(Eigen::Index u, Eigen::Index v) {
    const std::int64_t theta = std::lcm<std::int64_t>(u, v);
    if (theta > kMaxTheta) {
        throw std::invalid_argument("lcm(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") = " + std::to_string(theta) + " exceeds the " +
                                    std::to_string(kMaxTheta) + " cap");
    }
    return static_cast<int>(theta);
}

ExtendedVector lcm_extend(const Array& values, int theta) {
    const auto n = values.size();
    if (theta <= 0 || theta % n != 0) {
        throw std::invalid_argument("theta " + std::to_string(theta) +
                                    " is not a positive multiple of length " +
                                    std::to_string(n));
    }
    const int m = theta / static_cast<int>(n);
    Array out(theta);
    // hold the first grade ahead of the first anchor
    for (int r = 0; r < m - 1; ++r) out[r] = values[0];
    // anchors at 1-based indices k*m, linear interpolation between them
    for (Eigen::Index k = 0; k < n; ++k) out[(k + 1) * m - 1] = values[k];
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        const Eigen::Index lo = (k + 1) * m - 1;
        const double step = (values[k + 1] - values[k]) / m;
        for (int j = 1; j < m; ++j) out[lo + j] = values[k] + step * j;
    }
    return ExtendedVector{std::move(out), theta, m};
}

ExtendedVector lcm_extend(const FuzzySetVector& set, int theta) {
    return lcm_extend(set.grades(), theta);
}

Array select_anchors(const Array& values, int stride) {
    if (stride <= 0 || values.size() % stride != 0) {
        throw std::invalid_argument("stride must evenly divide the extended length");
    }
    const Eigen::Index n = values.size() / stride;
    Array out(n);
    for (Eigen::Index k = 0; k < n; ++k) out[k] = values[(k + 1) * stride - 1];
    return out;
}

double lcm_distance(const ExtendedVector& a, const ExtendedVector& b) {
    if (a.theta != b.theta) {
        throw std::invalid_argument("theta mismatch: " + std::to_string(a.theta) +
                                    " vs " + std::to_string(b.theta));
    }
    return std::sqrt((a.values - b.values).square().mean());
}

Array sign_vector(const Array& dif, SignForm form) {
    Array out(dif.size());
    if (form == SignForm::ThreeValued) {
        for (Eigen::Index i = 0; i < dif.size(); ++i) {
            out[i] = dif[i] > 0.0 ? 1.0 : (dif[i] < 0.0 ? -1.0 : 0.0);
        }
    } else {
        for (Eigen::Index i = 0; i < dif.size(); ++i) {
            out[i] = dif[i] >= 0.0 ? 1.0 : -1.0;
        }
    }
    return out;
}

Normalized normalize(const Array& quasi) {
    if (quasi.size() == 0) {
        throw std::invalid_argument("cannot normalize an empty vector");
    }
    const double lo = quasi.minCoeff();
    const double hi = quasi.maxCoeff();
    if (hi - lo < kDegenerateTol) {
        return Normalized{FuzzySetVector(clamp01(quasi)), true};
    }
    return Normalized{FuzzySetVector((quasi - lo) / (hi - lo)), false};
}

namespace {

LcmInferenceResult run_pipeline(const Array& match_lhs, const Array& match_rhs,
                                const Array& shifted_base, Eigen::Index out_len,
                                SignForm form, int theta) {
    const ExtendedVector lhs = lcm_extend(match_lhs, theta);
    const ExtendedVector rhs = lcm_extend(match_rhs, theta);
    const ExtendedVector base = lcm_extend(shifted_base, theta);

    const Array dif = lhs.values - rhs.values;
    const double distance = std::sqrt(dif.square().mean());
    const Array signs = sign_vector(dif, form);

    const Array quasi_quasi = base.values + distance * signs;
    const Array quasi = select_anchors(quasi_quasi, theta / static_cast<int>(out_len));

    Normalized norm = normalize(quasi);
    return LcmInferenceResult{std::move(norm.set), distance, signs, quasi,
                              norm.degenerate};
}

const Array& pick_tilt(const std::optional<FuzzySetVector>& tilt, CaseTag tag,
                       Eigen::Index expected_len) {
    if (!tilt) {
        throw std::invalid_argument(to_string(tag) + " needs a tilted vector");
    }
    if (tilt->size() != expected_len) {
        throw std::invalid_argument("tilted vector length " + std::to_string(tilt->size()) +
                                    " does not match " + std::to_string(expected_len));
    }
    return tilt->grades();
}

} // namespace

LcmInferenceResult fmp_lcm(const FuzzySetVector& antecedent,
                           const FuzzySetVector& premise,
                           const FuzzySetVector& consequent,
                           CaseTag tag, SignForm form,
                           const std::optional<FuzzySetVector>& tilt) {
    if (!is_fmp_case(tag)) {
        throw std::invalid_argument(to_string(tag) + " is not a forward-inference case");
    }
    if (antecedent.size() != premise.size()) {
        throw std::invalid_argument("antecedent length " + std::to_string(antecedent.size()) +
                                    " does not match premise length " +
                                    std::to_string(premise.size()));
    }
    const int theta = common_length(antecedent.size(), consequent.size());

    Array base;
    switch (tag) {
        case CaseTag::Case1:
        case CaseTag::Case2:
        case CaseTag::Case3:
            base = consequent.grades();
            break;
        case CaseTag::Case4:
            base = 1.0 - consequent.grades();
            break;
        default:
            base = pick_tilt(tilt, tag, consequent.size());
    }
    return run_pipeline(premise.grades(), antecedent.grades(), base,
                        consequent.size(), form, theta);
}

LcmInferenceResult fmt_lcm(const FuzzySetVector& consequent_b,
                           const FuzzySetVector& premise_bstar,
                           const FuzzySetVector& antecedent_a,
                           CaseTag tag, SignForm form,
                           const std::optional<FuzzySetVector>& tilt) {
    if (is_fmp_case(tag)) {
        throw std::invalid_argument(to_string(tag) + " is not a reverse-inference case");
    }
    if (consequent_b.size() != premise_bstar.size()) {
        throw std::invalid_argument("consequent length " + std::to_string(consequent_b.size()) +
                                    " does not match premise length " +
                                    std::to_string(premise_bstar.size()));
    }
    const int theta = common_length(antecedent_a.size(), consequent_b.size());

    Array base;
    switch (tag) {
        case CaseTag::Case6:
        case CaseTag::Case7:
        case CaseTag::Case8:
            base = 1.0 - antecedent_a.grades();
            break;
        case CaseTag::Case9:
            base = antecedent_a.grades();
            break;
        default:
            base = pick_tilt(tilt, tag, antecedent_a.size());
    }
    // dif_k = b*_k - (1 - b_k) on the extended grid
    return run_pipeline(premise_bstar.grades(), 1.0 - consequent_b.grades(), base,
                        antecedent_a.size(), form, theta);
}

} // namespace fuzzlcm
