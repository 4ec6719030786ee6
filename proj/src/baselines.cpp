#include "fuzzlcm/baselines.hpp"

#include "fuzzlcm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fuzzlcm::baselines {

namespace {

void check_equal_lengths(Eigen::Index a, Eigen::Index b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + " length mismatch: " +
                                    std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

RelationKind parse_relation(const std::string& name) {
    static const std::pair<const char*, RelationKind> table[] = {
        {"rp", RelationKind::Rp}, {"ra", RelationKind::Ra}, {"rc", RelationKind::Rc},
        {"rm", RelationKind::Rm}, {"rs", RelationKind::Rs}, {"rg", RelationKind::Rg},
        {"rss", RelationKind::Rss}, {"rsg", RelationKind::Rsg},
        {"rgs", RelationKind::Rgs}, {"rgg", RelationKind::Rgg}};
    for (const auto& [n, k] : table) {
        if (name == n) return k;
    }
    throw std::invalid_argument("unknown relation kind: " + name);
}

std::string to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::Rp: return "rp";
        case RelationKind::Ra: return "ra";
        case RelationKind::Rc: return "rc";
        case RelationKind::Rm: return "rm";
        case RelationKind::Rs: return "rs";
        case RelationKind::Rg: return "rg";
        case RelationKind::Rss: return "rss";
        case RelationKind::Rsg: return "rsg";
        case RelationKind::Rgs: return "rgs";
        case RelationKind::Rgg: return "rgg";
    }
    return "?";
}

double relation_entry(RelationKind kind, double a, double b) {
    const auto sharp_s = [](double x, double y) { return x <= y ? 1.0 : 0.0; };
    const auto sharp_g = [](double x, double y) { return x <= y ? 1.0 : y; };
    switch (kind) {
        case RelationKind::Rp: return a * b;
        case RelationKind::Ra: return std::min(1.0, 1.0 - a + b);
        case RelationKind::Rc: return std::min(a, b);
        case RelationKind::Rm: return std::max(std::min(a, b), 1.0 - a);
        case RelationKind::Rs: return sharp_s(a, b);
        case RelationKind::Rg: return sharp_g(a, b);
        case RelationKind::Rss: return std::min(sharp_s(a, b), sharp_s(1 - a, 1 - b));
        case RelationKind::Rsg: return std::min(sharp_s(a, b), sharp_g(1 - a, 1 - b));
        case RelationKind::Rgs: return std::min(sharp_g(a, b), sharp_s(1 - a, 1 - b));
        case RelationKind::Rgg: return std::min(sharp_g(a, b), sharp_g(1 - a, 1 - b));
    }
    throw std::logic_error("unreachable relation kind");
}

RelationMatrix build_relation(RelationKind kind, const FuzzySetVector& a,
                              const FuzzySetVector& b) {
    Eigen::ArrayXXd entries(a.size(), b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            entries(i, j) = relation_entry(kind, a[i], b[j]);
        }
    }
    return RelationMatrix{std::move(entries)};
}

FuzzySetVector compose_fmp(const FuzzySetVector& premise, const RelationMatrix& r,
                           TNorm t) {
    check_equal_lengths(premise.size(), r.entries.rows(), "premise/relation");
    Array out(r.entries.cols());
    for (Eigen::Index j = 0; j < r.entries.cols(); ++j) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < r.entries.rows(); ++i) {
            best = std::max(best, tnorm_value(t, premise[i], r.entries(i, j)));
        }
        out[j] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector compose_fmt(const FuzzySetVector& premise, const RelationMatrix& r,
                           TNorm t) {
    check_equal_lengths(premise.size(), r.entries.cols(), "premise/relation");
    Array out(r.entries.rows());
    for (Eigen::Index i = 0; i < r.entries.rows(); ++i) {
        double best = 0.0;
        for (Eigen::Index j = 0; j < r.entries.cols(); ++j) {
            best = std::max(best, tnorm_value(t, premise[j], r.entries(i, j)));
        }
        out[i] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector cri_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl, TNorm t) {
    check_equal_lengths(a.size(), astar.size(), "antecedent/premise");
    Array out(b.size());
    for (Eigen::Index j = 0; j < b.size(); ++j) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            best = std::max(best, tnorm_value(t, astar[i], implication_value(impl, a[i], b[j])));
        }
        out[j] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector cri_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl, TNorm t) {
    check_equal_lengths(b.size(), bstar.size(), "consequent/premise");
    Array out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        double best = 0.0;
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            best = std::max(best, tnorm_value(t, bstar[j], implication_value(impl, a[i], b[j])));
        }
        out[i] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector tip_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl) {
    return cri_fmp(a, astar, b, impl, residuated_tnorm(impl));
}

FuzzySetVector tip_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl) {
    check_equal_lengths(b.size(), bstar.size(), "consequent/premise");
    Array out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        double worst = 1.0;
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            worst = std::min(worst, implication_value(impl, implication_value(impl, a[i], b[j]),
                                                      bstar[j]));
        }
        out[i] = worst;
    }
    return FuzzySetVector(out);
}

FuzzySetVector qip_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl) {
    check_equal_lengths(a.size(), astar.size(), "antecedent/premise");
    const TNorm t = residuated_tnorm(impl);
    Array out(b.size());
    for (Eigen::Index j = 0; j < b.size(); ++j) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            const double inner = tnorm_value(t, implication_value(impl, astar[i], a[i]),
                                             implication_value(impl, a[i], b[j]));
            best = std::max(best, tnorm_value(t, astar[i], inner));
        }
        out[j] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector qip_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl) {
    check_equal_lengths(b.size(), bstar.size(), "consequent/premise");
    const TNorm t = residuated_tnorm(impl);
    Array out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        double best = 0.0;
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            const double inner = tnorm_value(t, implication_value(impl, a[i], b[j]),
                                             implication_value(impl, b[j], bstar[j]));
            best = std::max(best, tnorm_value(t, a[i], inner));
        }
        out[i] = best;
    }
    return FuzzySetVector(out);
}

FuzzySetVector aars_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                        const FuzzySetVector& b, AarsForm form) {
    const double sm = sm_from_dm(astar, a);
    if (form == AarsForm::MoreOrLess) {
        return FuzzySetVector((b.grades() / sm).min(1.0));
    }
    return FuzzySetVector(b.grades() * sm);
}

FuzzySetVector aars_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                        const FuzzySetVector& bstar, AarsForm form) {
    const double sm = sm_from_dm(bstar, b);
    if (form == AarsForm::MoreOrLess) {
        return FuzzySetVector((a.grades() / sm).min(1.0));
    }
    return FuzzySetVector(a.grades() * sm);
}

// ---------------------------------------------------------------------------
// Continuum ramp cells. The sup of min(w(x), R(..)) over x in [0,1] is
// attained at an interval endpoint, a relation branch boundary, or a
// crossing of w with a branch expression; all of those are closed-form.
// A fine scan with golden-section refinement backs the candidate list up.

namespace {

double sup_over_unit(const std::function<double(double)>& g,
                     std::vector<double> candidates) {
    candidates.push_back(0.0);
    candidates.push_back(1.0);
    double best = 0.0;
    for (double c : candidates) {
        if (c >= 0.0 && c <= 1.0) best = std::max(best, g(c));
    }
    // guard scan for any crossing the candidate list misses
    constexpr int kScan = 8192;
    int arg = 0;
    double scan_best = -1.0;
    for (int i = 0; i <= kScan; ++i) {
        const double v = g(static_cast<double>(i) / kScan);
        if (v > scan_best) {
            scan_best = v;
            arg = i;
        }
    }
    double lo = std::max(0.0, (arg - 1.0) / kScan);
    double hi = std::min(1.0, (arg + 1.0) / kScan);
    constexpr double kGolden = 0.6180339887498949;
    for (int it = 0; it < 200; ++it) {
        const double m1 = hi - kGolden * (hi - lo);
        const double m2 = lo + kGolden * (hi - lo);
        if (g(m1) < g(m2)) lo = m1; else hi = m2;
    }
    best = std::max(best, g(0.5 * (lo + hi)));
    return best;
}

std::vector<double> crossing_candidates(double v) {
    const double s5 = std::sqrt(5.0);
    std::vector<double> c = {
        v, 1.0 - v, 0.5, std::sqrt(v), v * v, std::sqrt(1.0 - v),
        (1.0 - v) * (1.0 - v), v / 2.0, 1.0 - v / 2.0, (1.0 + v) / 2.0,
        1.0 / (1.0 + v), (s5 - 1.0) / 2.0, (3.0 - s5) / 2.0,
        (-1.0 + std::sqrt(5.0 + 4.0 * v)) / 2.0,
        (-1.0 + std::sqrt(1.0 + 4.0 * v)) / 2.0,
        (-v + std::sqrt(v * v + 4.0)) / 2.0,
        std::min(v, 1.0 - v), std::max(v, 1.0 - v),
        1.0 / std::sqrt(2.0), 0.25, 0.75,
    };
    // squares of the quadratic roots cover the sqrt-hedge crossings
    const std::size_t base = c.size();
    for (std::size_t i = 0; i < base; ++i) c.push_back(c[i] * c[i]);
    if (v <= 0.25) {
        c.push_back((1.0 - std::sqrt(1.0 - 4.0 * v)) / 2.0);
        c.push_back((1.0 + std::sqrt(1.0 - 4.0 * v)) / 2.0);
    }
    return c;
}

} // namespace

double ramp_cell_fmp(RelationKind kind, RampPremise premise, double b) {
    const auto w = [premise](double mu) {
        switch (premise) {
            case RampPremise::Identity: return mu;
            case RampPremise::Very: return mu * mu;
            case RampPremise::MoreOrLess: return std::sqrt(mu);
            case RampPremise::Not: return 1.0 - mu;
        }
        return 0.0;
    };
    const auto g = [&](double mu) { return std::min(w(mu), relation_entry(kind, mu, b)); };
    return sup_over_unit(g, crossing_candidates(b));
}

double ramp_cell_fmt(RelationKind kind, RampPremise premise, double a) {
    const auto w = [premise](double beta) {
        switch (premise) {
            case RampPremise::Identity: return beta;          // premise B
            case RampPremise::Very: return 1.0 - beta * beta; // not very B
            case RampPremise::MoreOrLess: return 1.0 - std::sqrt(beta);
            case RampPremise::Not: return 1.0 - beta;         // not B
        }
        return 0.0;
    };
    const auto g = [&](double beta) { return std::min(w(beta), relation_entry(kind, a, beta)); };
    return sup_over_unit(g, crossing_candidates(a));
}

// ---------------------------------------------------------------------------

namespace {

Implication parse_impl(const std::string& name) {
    if (name == "godel") return Implication::Godel;
    if (name == "goguen") return Implication::Goguen;
    if (name == "lukasiewicz") return Implication::Lukasiewicz;
    if (name == "r0") return Implication::R0;
    throw std::invalid_argument("unknown implication: " + name);
}

} // namespace

MethodId parse_method(const std::string& selector) {
    const auto colon = selector.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("method selector needs a family:variant form, got " +
                                    selector);
    }
    const std::string family = selector.substr(0, colon);
    const std::string variant = selector.substr(colon + 1);
    MethodId id;
    id.selector = selector;
    if (family == "lcm") {
        id.family = MethodId::Family::Lcm;
        id.form = parse_sign_form(variant);
    } else if (family == "cri") {
        id.family = MethodId::Family::Cri;
        id.impl = parse_impl(variant);
    } else if (family == "tip") {
        id.family = MethodId::Family::Tip;
        id.impl = parse_impl(variant);
    } else if (family == "qip") {
        id.family = MethodId::Family::Qip;
        id.impl = parse_impl(variant);
    } else if (family == "aars") {
        id.family = MethodId::Family::Aars;
        if (variant == "reduction") {
            id.aars = AarsForm::Reduction;
        } else if (variant == "more-or-less") {
            id.aars = AarsForm::MoreOrLess;
        } else {
            throw std::invalid_argument("aars variant must be reduction or more-or-less");
        }
    } else if (family == "rel") {
        id.family = MethodId::Family::Relation;
        id.relation = parse_relation(variant);
    } else {
        throw std::invalid_argument("unknown method family: " + family);
    }
    return id;
}

std::vector<std::string> known_selectors() {
    std::vector<std::string> out = {"lcm:p3", "lcm:p2"};
    for (const char* impl : {"godel", "goguen", "lukasiewicz", "r0"}) {
        for (const char* fam : {"cri", "tip", "qip"}) {
            out.push_back(std::string(fam) + ":" + impl);
        }
    }
    out.emplace_back("aars:reduction");
    out.emplace_back("aars:more-or-less");
    for (const char* rel : {"rp", "ra", "rc", "rm", "rs", "rg", "rss", "rsg", "rgs", "rgg"}) {
        out.push_back(std::string("rel:") + rel);
    }
    return out;
}

} // namespace fuzzlcm::baselines
