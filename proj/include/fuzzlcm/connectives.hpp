#pragma once

#include <string>

namespace fuzzlcm {

enum class Implication { Godel, Goguen, Lukasiewicz, R0, SharpS, SharpG };

enum class TNorm { Min, Product, Lukasiewicz, R0Conjunction };

/// Residual implication value for a, b in [0,1]. Every kind returns 1
/// whenever a <= b.
double implication_value(Implication kind, double a, double b);

double tnorm_value(TNorm kind, double a, double b);

/// The left-continuous t-norm whose residuum is the given implication.
/// SharpS/SharpG are not residua of a t-norm; they pair with Min for
/// sup-composition.
TNorm residuated_tnorm(Implication kind);

std::string to_string(Implication kind);
std::string to_string(TNorm kind);

} // namespace fuzzlcm
