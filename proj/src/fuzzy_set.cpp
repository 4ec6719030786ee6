#include "fuzzlcm/fuzzy_set.hpp"

#include <cmath>

namespace fuzzlcm {

namespace {

void check_grades(const Array& grades) {
    if (grades.size() < 2) {
        throw std::invalid_argument("fuzzy set needs at least 2 grades, got " +
                                    std::to_string(grades.size()));
    }
    for (Eigen::Index i = 0; i < grades.size(); ++i) {
        const double g = grades[i];
        if (!(g >= 0.0 && g <= 1.0)) {
            throw std::invalid_argument("grade out of [0,1] at index " +
                                        std::to_string(i) + ": " + std::to_string(g));
        }
    }
}

} // namespace

FuzzySetVector::FuzzySetVector(Array grades) : grades_(std::move(grades)) {
    check_grades(grades_);
}

FuzzySetVector::FuzzySetVector(Array grades, Array universe)
    : grades_(std::move(grades)), universe_(std::move(universe)) {
    check_grades(grades_);
    if (universe_->size() != grades_.size()) {
        throw std::invalid_argument("universe length " + std::to_string(universe_->size()) +
                                    " does not match grades length " +
                                    std::to_string(grades_.size()));
    }
    for (Eigen::Index i = 1; i < universe_->size(); ++i) {
        if (!((*universe_)[i] > (*universe_)[i - 1])) {
            throw std::invalid_argument("universe coordinates must strictly increase");
        }
    }
}

FuzzySetVector apply_hedge(const FuzzySetVector& set, const Hedge& hedge) {
    switch (hedge.kind) {
        case HedgeKind::Identity:
            return set;
        case HedgeKind::Very:
            return FuzzySetVector(set.grades().square());
        case HedgeKind::MoreOrLess:
            return FuzzySetVector(set.grades().sqrt());
        case HedgeKind::Not:
            return FuzzySetVector(1.0 - set.grades());
        case HedgeKind::SlightlyTilted:
            if (!hedge.tilt) {
                throw std::invalid_argument("slightly-tilted hedge needs a tilt vector");
            }
            if (hedge.tilt->size() != set.size()) {
                throw std::invalid_argument("tilt length " + std::to_string(hedge.tilt->size()) +
                                            " does not match set length " +
                                            std::to_string(set.size()));
            }
            return FuzzySetVector(*hedge.tilt);
    }
    throw std::logic_error("unreachable hedge kind");
}

FuzzySetVector complement(const FuzzySetVector& set) {
    return FuzzySetVector(1.0 - set.grades());
}

} // namespace fuzzlcm
