#pragma once

#include "fuzzlcm/connectives.hpp"
#include "fuzzlcm/fuzzy_set.hpp"
#include "fuzzlcm/lcm.hpp"

#include <string>
#include <vector>

namespace fuzzlcm::baselines {

enum class RelationKind { Rp, Ra, Rc, Rm, Rs, Rg, Rss, Rsg, Rgs, Rgg };

RelationKind parse_relation(const std::string& name);   // "rp".."rgg"
std::string to_string(RelationKind kind);

double relation_entry(RelationKind kind, double a, double b);

struct RelationMatrix {
    Eigen::ArrayXXd entries;   // u x v, all in [0,1]
};

RelationMatrix build_relation(RelationKind kind, const FuzzySetVector& a,
                              const FuzzySetVector& b);

/// Sup-composition of a premise with a relation matrix:
/// FMP: B*_j = max_i t(premise_i, R_ij); FMT: A*_i = max_j t(premise_j, R_ij).
FuzzySetVector compose_fmp(const FuzzySetVector& premise, const RelationMatrix& r,
                           TNorm t = TNorm::Min);
FuzzySetVector compose_fmt(const FuzzySetVector& premise, const RelationMatrix& r,
                           TNorm t = TNorm::Min);

// Compositional rule of inference with an implication relation.
FuzzySetVector cri_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl, TNorm t);
FuzzySetVector cri_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl, TNorm t);

// Triple-implication solutions; FMP is the sup-residuum form, FMT the
// inf of nested implications. The t-norm is the residuated pair of impl.
FuzzySetVector tip_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl);
FuzzySetVector tip_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl);

// Quintuple-implication solutions.
FuzzySetVector qip_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                       const FuzzySetVector& b, Implication impl);
FuzzySetVector qip_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                       const FuzzySetVector& bstar, Implication impl);

enum class AarsForm { MoreOrLess, Reduction };

// Similarity-scaled consequent modification, SM = 1/(1 + RMS distance).
FuzzySetVector aars_fmp(const FuzzySetVector& a, const FuzzySetVector& astar,
                        const FuzzySetVector& b, AarsForm form);
FuzzySetVector aars_fmt(const FuzzySetVector& a, const FuzzySetVector& b,
                        const FuzzySetVector& bstar, AarsForm form);

// ---------------------------------------------------------------------------
// Continuum cells for the unit-ramp test problem (antecedent and consequent
// both the identity ramp on their universes). The sup runs over the whole
// membership range [0,1], which is what the tabulated closed forms assume;
// a 5-point discrete sup cannot reach their irrational critical points.

enum class RampPremise { Identity, Very, MoreOrLess, Not };

/// sup_{mu in [0,1]} min(w(mu), R(mu, b)) with w the hedged ramp premise.
double ramp_cell_fmp(RelationKind kind, RampPremise premise, double b);

/// sup_{beta in [0,1]} min(w(beta), R(a, beta)); premise hedges act on the
/// consequent ramp and are complemented (not B, not very B, ...), except
/// RampPremise::Identity which is the plain ramp B.
double ramp_cell_fmt(RelationKind kind, RampPremise premise, double a);

// ---------------------------------------------------------------------------
// Method selectors, e.g. "cri:godel", "tip:lukasiewicz", "qip:r0",
// "aars:reduction", "aars:more-or-less", "rel:rm", "lcm:p3", "lcm:p2".

struct MethodId {
    enum class Family { Lcm, Cri, Tip, Qip, Aars, Relation } family;
    SignForm form = SignForm::ThreeValued;      // Lcm
    Implication impl = Implication::Godel;      // Cri / Tip / Qip
    AarsForm aars = AarsForm::Reduction;        // Aars
    RelationKind relation = RelationKind::Rc;   // Relation
    std::string selector;
};

MethodId parse_method(const std::string& selector);
std::vector<std::string> known_selectors();

} // namespace fuzzlcm::baselines
