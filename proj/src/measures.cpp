#include "fuzzlcm/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzlcm {

namespace {

void check_lengths(const FuzzySetVector& p, const FuzzySetVector& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("length mismatch: " + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()));
    }
}

double godel_biimpl(double a, double b) {
    const double fwd = a <= b ? 1.0 : b;
    const double bwd = b <= a ? 1.0 : a;
    return std::min(fwd, bwd);
}

} // namespace

double dm_distance(const FuzzySetVector& p, const FuzzySetVector& q) {
    check_lengths(p, q);
    return std::sqrt((p.grades() - q.grades()).square().mean());
}

double sm_from_dm(const FuzzySetVector& p, const FuzzySetVector& q) {
    return 1.0 / (1.0 + dm_distance(p, q));
}

double similarity(int measure_id, const FuzzySetVector& p, const FuzzySetVector& q) {
    check_lengths(p, q);
    const Array& a = p.grades();
    const Array& b = q.grades();
    const auto n = static_cast<double>(a.size());

    switch (measure_id) {
        case 17: {
            const double den = (a + b).sum();
            if (den == 0.0) return 1.0;   // both all-zero: identical
            return 1.0 - (a - b).abs().sum() / den;
        }
        case 18:
            return (1.0 - (a - b).abs()).mean();
        case 19:
            return 1.0 - (a - b).abs().maxCoeff();
        case 20: {
            const double den = std::max(a.square().sum(), b.square().sum());
            if (den == 0.0) return 1.0;
            return (a * b).sum() / den;
        }
        case 21: {
            const double den = a.max(b).sum();
            if (den == 0.0) return 1.0;
            return a.min(b).sum() / den;
        }
        case 22: {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) {
                const double hi = std::max(a[i], b[i]);
                acc += hi == 0.0 ? 1.0 : std::min(a[i], b[i]) / hi;
            }
            return acc / n;
        }
        case 23:
            return a.min(b).maxCoeff();
        case 24: {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) {
                acc += 0.5 * (godel_biimpl(a[i], b[i]) +
                              godel_biimpl(1.0 - a[i], 1.0 - b[i]));
            }
            return acc / n;
        }
        case 25: {
            const Array na = 1.0 - a;
            const Array nb = 1.0 - b;
            const double num = (a * b + na * nb).sum();
            const double den = std::sqrt((a.square() + na.square()).sum() *
                                         (b.square() + nb.square()).sum());
            if (den == 0.0) return 1.0;
            return num / den;
        }
        default:
            throw std::invalid_argument("similarity measure id must be 17..25, got " +
                                        std::to_string(measure_id));
    }
}

} // namespace fuzzlcm
