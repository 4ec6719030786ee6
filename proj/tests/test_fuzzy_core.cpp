#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "fuzzlcm/connectives.hpp"
#include "fuzzlcm/measures.hpp"

#include <cmath>
#include <random>

using namespace fuzzlcm;
using testutil::arr;
using testutil::check_close;
using testutil::set;

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(FuzzySetVector(arr({0.5})), std::invalid_argument);
    CHECK_THROWS_AS(FuzzySetVector(arr({0.5, 1.2})), std::invalid_argument);
    CHECK_THROWS_AS(FuzzySetVector(arr({-0.1, 0.5})), std::invalid_argument);
    CHECK_THROWS_AS(FuzzySetVector(arr({0.1, 0.5}), arr({0.0, 1.0, 2.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(FuzzySetVector(arr({0.1, 0.5}), arr({1.0, 1.0})),
                    std::invalid_argument);
    CHECK_NOTHROW(FuzzySetVector(arr({0.0, 1.0}), arr({-3.0, 2.5})));
}

TEST_CASE("hedges") {
    const auto a = set({1, 0.3, 0, 0, 0});
    check_close(apply_hedge(a, Hedge::very()).grades(), arr({1, 0.09, 0, 0, 0}), 1e-15);
    check_close(apply_hedge(a, Hedge::identity()).grades(), a.grades(), 0);
    check_close(apply_hedge(a, Hedge::more_or_less()).grades(),
                arr({1, std::sqrt(0.3), 0, 0, 0}), 1e-12);
    CHECK(apply_hedge(a, Hedge::more_or_less()).grades()[1] ==
          testutil::near(0.5477, 5e-4));
    check_close(apply_hedge(a, Hedge::nott()).grades(), arr({0, 0.7, 1, 1, 1}), 1e-15);

    const auto tilt = arr({1, 0.2, 0, 0, 0});
    check_close(apply_hedge(a, Hedge::slightly_tilted(tilt)).grades(), tilt, 0);
    CHECK_THROWS_AS(apply_hedge(a, Hedge::slightly_tilted(arr({1, 0.2}))),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_hedge(a, Hedge{HedgeKind::SlightlyTilted, {}}),
                    std::invalid_argument);
}

TEST_CASE("complement") {
    const auto b = set({0, 0.2, 0.4, 0.7, 0.9, 1});
    check_close(complement(b).grades(), arr({1, 0.8, 0.6, 0.3, 0.1, 0}), 1e-15);
    check_close(complement(complement(b)).grades(), b.grades(), 1e-15);
    const auto half = set({0.5, 0.5, 0.5});
    check_close(complement(half).grades(), half.grades(), 1e-15);
}

TEST_CASE("hedge outputs stay inside the unit interval") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const FuzzySetVector s(testutil::random_grades(rng, 6, false));
        for (const auto& h : {Hedge::very(), Hedge::more_or_less(), Hedge::nott()}) {
            const auto out = apply_hedge(s, h).grades();
            CHECK(out.minCoeff() >= 0.0);
            CHECK(out.maxCoeff() <= 1.0);
        }
    }
}

TEST_CASE("implication values") {
    CHECK(implication_value(Implication::Lukasiewicz, 0.8, 0.5) == doctest::Approx(0.7));
    CHECK(implication_value(Implication::SharpS, 0.3, 0.3) == 1.0);
    CHECK(implication_value(Implication::SharpS, 0.31, 0.3) == 0.0);
    CHECK(implication_value(Implication::Goguen, 0.5, 0.25) == doctest::Approx(0.5));
    CHECK(implication_value(Implication::Godel, 0.5, 0.25) == doctest::Approx(0.25));
    CHECK(implication_value(Implication::R0, 0.3, 0.2) == doctest::Approx(0.7));
    CHECK(implication_value(Implication::SharpG, 0.5, 0.25) == doctest::Approx(0.25));
}

TEST_CASE("residuation boundary: a <= b gives 1 for every kind") {
    for (const auto kind : {Implication::Godel, Implication::Goguen,
                            Implication::Lukasiewicz, Implication::R0,
                            Implication::SharpS, Implication::SharpG}) {
        for (int ai = 0; ai <= 100; ++ai) {
            for (int bi = ai; bi <= 100; ++bi) {
                CHECK(implication_value(kind, ai / 100.0, bi / 100.0) == 1.0);
            }
        }
    }
}

TEST_CASE("residuum matches brute-force residuation of the paired t-norm") {
    // impl(a,b) should be the largest z with t(a,z) <= b, up to grid width
    for (const auto kind : {Implication::Godel, Implication::Goguen,
                            Implication::Lukasiewicz, Implication::R0}) {
        const TNorm t = residuated_tnorm(kind);
        for (int ai = 0; ai <= 20; ++ai) {
            for (int bi = 0; bi <= 20; ++bi) {
                const double a = ai / 20.0, b = bi / 20.0;
                double best = 0.0;
                for (int zi = 0; zi <= 100; ++zi) {
                    const double z = zi / 100.0;
                    if (tnorm_value(t, a, z) <= b + 1e-12) best = z;
                }
                const double impl = implication_value(kind, a, b);
                CHECK(impl >= best - 1e-12);
                CHECK(impl <= best + 0.0100001);
            }
        }
    }
}

TEST_CASE("t-norm axioms on a grid") {
    for (const auto kind : {TNorm::Min, TNorm::Product, TNorm::Lukasiewicz,
                            TNorm::R0Conjunction}) {
        for (int ai = 0; ai <= 10; ++ai) {
            const double a = ai / 10.0;
            CHECK(tnorm_value(kind, a, 1.0) == doctest::Approx(a));
            for (int bi = 0; bi <= 10; ++bi) {
                const double b = bi / 10.0;
                const double ab = tnorm_value(kind, a, b);
                CHECK(ab >= 0.0);
                CHECK(ab <= 1.0);
                CHECK(ab == doctest::Approx(tnorm_value(kind, b, a)));
                if (bi < 10) {
                    CHECK(ab <= tnorm_value(kind, a, (bi + 1) / 10.0) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("distance measure") {
    const auto a = set({1, 0.3, 0, 0, 0});
    CHECK(dm_distance(a, a) == 0.0);
    CHECK(dm_distance(set({1, 0}), set({0, 1})) == doctest::Approx(1.0));
    CHECK(dm_distance(a, set({1, 0.09, 0, 0, 0})) == testutil::near(0.09391, 5e-6));
    CHECK_THROWS_AS(dm_distance(a, set({1, 0})), std::invalid_argument);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const FuzzySetVector p(testutil::random_grades(rng, 5, false));
        const FuzzySetVector q(testutil::random_grades(rng, 5, false));
        CHECK(dm_distance(p, q) == doctest::Approx(dm_distance(q, p)));
        CHECK(dm_distance(p, p) == 0.0);
        if (!(p == q)) CHECK(dm_distance(p, q) > 0.0);
        CHECK(dm_distance(p, q) <= 1.0);
    }
}

TEST_CASE("similarity from distance") {
    const auto a = set({1, 0.3, 0, 0, 0});
    CHECK(sm_from_dm(a, a) == 1.0);
    CHECK(sm_from_dm(set({1, 0}), set({0, 1})) == doctest::Approx(0.5));
    CHECK(sm_from_dm(a, set({1, 0.09, 0, 0, 0})) == testutil::near(0.91415, 5e-6));
}

TEST_CASE("similarity measures 17..25") {
    CHECK(similarity(19, set({1, 0.3}), set({1, 0.3})) == doctest::Approx(1.0));
    CHECK(similarity(21, set({1, 0}), set({0, 1})) == doctest::Approx(0.0));
    CHECK(similarity(18, set({1, 0.3}), set({1, 0.09})) == doctest::Approx(0.895));
    CHECK_THROWS_AS(similarity(16, set({1, 0}), set({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(similarity(18, set({1, 0}), set({0, 1, 0})), std::invalid_argument);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const FuzzySetVector p(testutil::random_grades(rng, 6, trial % 2 == 0));
        const FuzzySetVector q(testutil::random_grades(rng, 6, false));
        for (int m = 17; m <= 25; ++m) {
            const double s = similarity(m, p, q);
            CHECK(s >= -1e-12);
            CHECK(s <= 1.0 + 1e-12);
        }
        // identity: measures 17-19 and 21-24 for every vector
        for (int m : {17, 18, 19, 21, 22, 23, 24}) {
            if (m == 23) continue;   // overlap height, 1 only for normal sets
            CHECK(similarity(m, p, p) == doctest::Approx(1.0));
        }
        // and 20/23/25 whenever the set is normal
        if (trial % 2 == 0) {
            CHECK(similarity(20, p, p) == doctest::Approx(1.0));
            CHECK(similarity(23, p, p) == doctest::Approx(1.0));
            CHECK(similarity(25, p, p) == doctest::Approx(1.0));
        }
        // symmetry holds for every formula except the max-denominator 20
        for (int m : {17, 18, 19, 21, 22, 23, 24, 25, 20}) {
            CHECK(similarity(m, p, q) == doctest::Approx(similarity(m, q, p)));
        }
    }
}

TEST_CASE("similarity degenerate all-zero pairs") {
    std::vector<double> z{0, 0, 0};
    const FuzzySetVector zero(arr({0, 0, 0}));
    for (int m : {17, 20, 21, 22}) {
        CHECK(similarity(m, zero, zero) == doctest::Approx(1.0));
    }
    CHECK(similarity(23, zero, zero) == doctest::Approx(0.0));
}
