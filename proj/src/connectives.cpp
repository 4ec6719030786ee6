#include "fuzzlcm/connectives.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzlcm {

double implication_value(Implication kind, double a, double b) {
    switch (kind) {
        case Implication::Godel:
            return a <= b ? 1.0 : b;
        case Implication::Goguen:
            return a <= b ? 1.0 : b / a;   // a > b >= 0 implies a > 0
        case Implication::Lukasiewicz:
            return std::min(1.0, 1.0 - a + b);
        case Implication::R0:
            return a <= b ? 1.0 : std::max(1.0 - a, b);
        case Implication::SharpS:
            return a <= b ? 1.0 : 0.0;
        case Implication::SharpG:
            return a <= b ? 1.0 : b;
    }
    throw std::logic_error("unreachable implication kind");
}

double tnorm_value(TNorm kind, double a, double b) {
    switch (kind) {
        case TNorm::Min:
            return std::min(a, b);
        case TNorm::Product:
            return a * b;
        case TNorm::Lukasiewicz:
            return std::max(0.0, a + b - 1.0);
        case TNorm::R0Conjunction:
            return a + b <= 1.0 ? 0.0 : std::min(a, b);
    }
    throw std::logic_error("unreachable t-norm kind");
}

TNorm residuated_tnorm(Implication kind) {
    switch (kind) {
        case Implication::Godel:
            return TNorm::Min;
        case Implication::Goguen:
            return TNorm::Product;
        case Implication::Lukasiewicz:
            return TNorm::Lukasiewicz;
        case Implication::R0:
            return TNorm::R0Conjunction;
        case Implication::SharpS:
        case Implication::SharpG:
            return TNorm::Min;
    }
    throw std::logic_error("unreachable implication kind");
}

std::string to_string(Implication kind) {
    switch (kind) {
        case Implication::Godel: return "godel";
        case Implication::Goguen: return "goguen";
        case Implication::Lukasiewicz: return "lukasiewicz";
        case Implication::R0: return "r0";
        case Implication::SharpS: return "sharp-s";
        case Implication::SharpG: return "sharp-g";
    }
    return "?";
}

std::string to_string(TNorm kind) {
    switch (kind) {
        case TNorm::Min: return "min";
        case TNorm::Product: return "product";
        case TNorm::Lukasiewicz: return "lukasiewicz";
        case TNorm::R0Conjunction: return "r0";
    }
    return "?";
}

} // namespace fuzzlcm
