#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>

namespace fuzzlcm {

using Array = Eigen::ArrayXd;

/// Discrete fuzzy set: an ordered vector of membership grades, optionally
/// paired with strictly increasing universe coordinates of the same length.
///
/// Grades are validated on construction; out-of-range input is rejected
/// rather than clamped. Instances are immutable and freely shareable.
class FuzzySetVector {
public:
    explicit FuzzySetVector(Array grades);
    FuzzySetVector(Array grades, Array universe);

    const Array& grades() const { return grades_; }
    const std::optional<Array>& universe() const { return universe_; }
    Eigen::Index size() const { return grades_.size(); }
    double operator[](Eigen::Index i) const { return grades_[i]; }

    bool operator==(const FuzzySetVector& other) const {
        return grades_.size() == other.grades_.size() &&
               (grades_ == other.grades_).all();
    }

private:
    Array grades_;
    std::optional<Array> universe_;
};

enum class HedgeKind { Identity, Very, MoreOrLess, Not, SlightlyTilted };

/// Unary premise modifier. SlightlyTilted carries an explicit replacement
/// vector; the other kinds are elementwise maps.
struct Hedge {
    HedgeKind kind = HedgeKind::Identity;
    std::optional<Array> tilt;

    static Hedge identity() { return {HedgeKind::Identity, {}}; }
    static Hedge very() { return {HedgeKind::Very, {}}; }
    static Hedge more_or_less() { return {HedgeKind::MoreOrLess, {}}; }
    static Hedge nott() { return {HedgeKind::Not, {}}; }
    static Hedge slightly_tilted(Array v) { return {HedgeKind::SlightlyTilted, std::move(v)}; }
};

FuzzySetVector apply_hedge(const FuzzySetVector& set, const Hedge& hedge);

/// Elementwise 1 - g. Involutive.
FuzzySetVector complement(const FuzzySetVector& set);

} // namespace fuzzlcm
