#include "qfade/encoding.hpp"

#include <algorithm>
#include <cmath>

namespace qfade {

std::string to_string(EncodingMode mode) {
    return mode == EncodingMode::Arc ? "arc" : "simple";
}

EncodingMode encoding_mode_from_string(const std::string& name) {
    if (name == "arc") return EncodingMode::Arc;
    if (name == "simple") return EncodingMode::Simple;
    throw std::invalid_argument("unknown encoding mode '" + name + "' (expected arc or simple)");
}

double normalize_cycle(double cycle, const FeatureBounds& bounds) {
    if (bounds.min_cycle >= bounds.max_cycle) {
        throw DegenerateBounds("feature bounds [" + std::to_string(bounds.min_cycle) + ", " +
                               std::to_string(bounds.max_cycle) + "] do not span a window");
    }
    const double span = static_cast<double>(bounds.max_cycle) - static_cast<double>(bounds.min_cycle);
    const double x = 2.0 * (cycle - static_cast<double>(bounds.min_cycle)) / span - 1.0;
    return std::clamp(x, -1.0, 1.0);
}

Circuit encoding_circuit(double x_norm, const EncodingSpec& spec) {
    if (std::abs(x_norm) > 1.0 + 1e-12 || !std::isfinite(x_norm)) {
        throw FeatureOutOfRange("normalized feature " + std::to_string(x_norm) +
                                " outside [-1, 1]");
    }
    const double x = std::clamp(x_norm, -1.0, 1.0);

    Circuit circuit(spec.n_qubits);
    for (int q = 0; q < spec.n_qubits; ++q) {
        if (spec.mode == EncodingMode::Arc) {
            circuit.push(GateOp::ry(q, std::asin(x)));
            circuit.push(GateOp::rz(q, std::acos(x * x)));
        } else {
            circuit.push(GateOp::ry(q, std::acos(x)));
        }
    }
    return circuit;
}

}  // namespace qfade
