#pragma once

#include "fuzzlcm/baselines.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

// Closed forms of the sup-min composition cells on the unit-ramp test
// problem, one per (relation, premise, direction). Derived directly from
// the relation definitions; cells where the published table disagrees with
// its own relation formulas carry a note (the table groups rows and swaps
// two hedge columns).

namespace mizumoto {

using fuzzlcm::baselines::RampPremise;
using fuzzlcm::baselines::RelationKind;

struct CellForm {
    RelationKind relation;
    RampPremise premise;
    bool fmp;   // false = reverse direction
    std::function<double(double)> value;
    const char* note;   // nullptr when the printed table matches
};

inline std::vector<CellForm> cell_forms() {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    const double psi = (3.0 - std::sqrt(5.0)) / 2.0;   // 0.382...
    using K = RelationKind;
    using P = RampPremise;
    const auto mx = [](double x, double y) { return std::max(x, y); };
    const auto mn = [](double x, double y) { return std::min(x, y); };

    std::vector<CellForm> cells;
    const auto add = [&](K k, P p, bool fmp, std::function<double(double)> f,
                         const char* note = nullptr) {
        cells.push_back(CellForm{k, p, fmp, std::move(f), note});
    };

    // forward direction, premises {A, very A, more-or-less A, not A}
    add(K::Rm, P::Identity, true, [mx](double b) { return mx(0.5, b); });
    add(K::Rm, P::Very, true, [mx, psi](double b) { return mx(psi, b); },
        "printed table swaps the very/more-or-less constants");
    add(K::Rm, P::MoreOrLess, true, [mx, phi](double b) { return mx(phi, b); },
        "printed table swaps the very/more-or-less constants");
    add(K::Rm, P::Not, true, [](double) { return 1.0; });

    add(K::Ra, P::Identity, true, [](double b) { return (1.0 + b) / 2.0; });
    add(K::Ra, P::Very, true,
        [](double b) { return (3.0 + 2.0 * b - std::sqrt(5.0 + 4.0 * b)) / 2.0; });
    add(K::Ra, P::MoreOrLess, true,
        [](double b) { return (std::sqrt(5.0 + 4.0 * b) - 1.0) / 2.0; });
    add(K::Ra, P::Not, true, [](double) { return 1.0; });

    add(K::Rc, P::Identity, true, [](double b) { return b; });
    add(K::Rc, P::Very, true, [](double b) { return b; });
    add(K::Rc, P::MoreOrLess, true, [](double b) { return b; });
    add(K::Rc, P::Not, true, [mn](double b) { return mn(0.5, b); });

    for (K k : {K::Rs, K::Rg, K::Rss, K::Rsg, K::Rgs, K::Rgg}) {
        add(k, P::Identity, true, [](double b) { return b; });
        add(k, P::MoreOrLess, true, [](double b) { return std::sqrt(b); });
        const bool square = (k == K::Rs || k == K::Rss || k == K::Rsg);
        add(k, P::Very, true,
            square ? std::function<double(double)>([](double b) { return b * b; })
                   : std::function<double(double)>([](double b) { return b; }),
            square ? nullptr
                   : "g-implication caps at the consequent grade; printed row claims b^2");
        const bool ones = (k == K::Rs || k == K::Rg);
        add(k, P::Not, true,
            ones ? std::function<double(double)>([](double) { return 1.0; })
                 : std::function<double(double)>([](double b) { return 1.0 - b; }));
    }

    // reverse direction, premises {B, not very B, not more-or-less B, not B}
    add(K::Rm, P::Not, false, [mx](double a) { return mx(0.5, 1.0 - a); });
    add(K::Rm, P::Very, false,
        [mx, mn, phi](double a) { return mx(1.0 - a, mn(a, phi)); });
    add(K::Rm, P::MoreOrLess, false,
        [mx, mn, psi](double a) { return mx(1.0 - a, mn(a, psi)); });
    add(K::Rm, P::Identity, false, [mx](double a) { return mx(a, 1.0 - a); });

    add(K::Ra, P::Not, false, [](double a) { return 1.0 - a / 2.0; });
    add(K::Ra, P::Very, false,
        [](double a) { return (1.0 - 2.0 * a + std::sqrt(1.0 + 4.0 * a)) / 2.0; });
    add(K::Ra, P::MoreOrLess, false,
        [](double a) { return (3.0 - std::sqrt(1.0 + 4.0 * a)) / 2.0; });
    add(K::Ra, P::Identity, false, [](double) { return 1.0; });

    add(K::Rc, P::Not, false, [mn](double a) { return mn(a, 0.5); });
    add(K::Rc, P::Very, false, [mn, phi](double a) { return mn(a, phi); });
    add(K::Rc, P::MoreOrLess, false, [mn, psi](double a) { return mn(a, psi); });
    add(K::Rc, P::Identity, false, [](double a) { return a; });

    for (K k : {K::Rs, K::Rss, K::Rsg}) {
        add(k, P::Not, false, [](double a) { return 1.0 - a; });
        add(k, P::Very, false, [](double a) { return 1.0 - a * a; });
        add(k, P::MoreOrLess, false, [](double a) { return 1.0 - std::sqrt(a); });
    }
    for (K k : {K::Rg, K::Rgs, K::Rgg}) {
        add(k, P::Not, false, [mx](double a) { return mx(0.5, 1.0 - a); });
        add(k, P::Very, false, [mx, phi](double a) { return mx(phi, 1.0 - a * a); });
        add(k, P::MoreOrLess, false,
            [mx, psi](double a) { return mx(psi, 1.0 - std::sqrt(a)); });
    }
    add(K::Rs, P::Identity, false, [](double) { return 1.0; });
    add(K::Rg, P::Identity, false, [](double) { return 1.0; });
    add(K::Rss, P::Identity, false, [](double a) { return a; });
    add(K::Rgs, P::Identity, false, [](double a) { return a; });
    add(K::Rsg, P::Identity, false, [mx](double a) { return mx(0.5, a); });
    add(K::Rgg, P::Identity, false, [mx](double a) { return mx(0.5, a); });

    return cells;
}

inline std::string premise_label(RampPremise p, bool fmp) {
    switch (p) {
        case RampPremise::Identity: return fmp ? "A" : "B";
        case RampPremise::Very: return fmp ? "very A" : "not very B";
        case RampPremise::MoreOrLess: return fmp ? "more-or-less A" : "not more-or-less B";
        case RampPremise::Not: return fmp ? "not A" : "not B";
    }
    return "?";
}

} // namespace mizumoto
