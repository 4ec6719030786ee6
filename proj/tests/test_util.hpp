#pragma once

#include "fuzzlcm/fuzzy_set.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>

namespace testutil {

/// Absolute-tolerance comparison helper (doctest's Approx is relative).
struct Near {
    double want;
    double tol;
    friend bool operator==(double got, const Near& n) {
        return std::abs(got - n.want) <= n.tol;
    }
    friend bool operator==(const Near& n, double got) { return got == n; }
    friend std::ostream& operator<<(std::ostream& os, const Near& n) {
        return os << n.want << " +/- " << n.tol;
    }
};

inline Near near(double want, double tol) { return Near{want, tol}; }

inline fuzzlcm::Array arr(std::initializer_list<double> values) {
    fuzzlcm::Array a(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) a[i++] = v;
    return a;
}

inline fuzzlcm::FuzzySetVector set(std::initializer_list<double> values) {
    return fuzzlcm::FuzzySetVector(arr(values));
}

inline void check_close(const fuzzlcm::Array& got, const fuzzlcm::Array& want,
                        double tol) {
    REQUIRE(got.size() == want.size());
    for (Eigen::Index i = 0; i < got.size(); ++i) {
        INFO("index ", i);
        CHECK(got[i] == near(want[i], tol));
    }
}

/// Random grade vector; when `normal` is set the vector contains an exact 1
/// and an exact 0 so min-max rescaling is the identity.
inline fuzzlcm::Array random_grades(std::mt19937& rng, Eigen::Index n, bool normal) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    fuzzlcm::Array a(n);
    for (Eigen::Index i = 0; i < n; ++i) a[i] = uni(rng);
    if (normal) {
        std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
        const Eigen::Index hi = pick(rng);
        Eigen::Index lo = pick(rng);
        while (lo == hi) lo = pick(rng);
        a[hi] = 1.0;
        a[lo] = 0.0;
    }
    return a;
}

} // namespace testutil
