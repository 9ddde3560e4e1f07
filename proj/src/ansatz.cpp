#include "qfade/ansatz.hpp"

#include <numbers>
#include <random>
#include <string>

namespace qfade {

int param_count(const AnsatzSpec& spec) {
    return 3 * spec.n_qubits * spec.depth;
}

Circuit ansatz_circuit(const AnsatzSpec& spec, const ParameterVector& theta) {
    const int expected = param_count(spec);
    if (static_cast<int>(theta.size()) != expected) {
        throw ParamLengthMismatch("ansatz expects " + std::to_string(expected) +
                                  " parameters, got " + std::to_string(theta.size()));
    }

    const int n = spec.n_qubits;
    Circuit circuit(n);
    for (int layer = 0; layer < spec.depth; ++layer) {
        for (int q = 0; q < n; ++q) {
            const int base = 3 * (layer * n + q);
            circuit.push(GateOp::rx(q, theta[base]));
            circuit.push(GateOp::rz(q, theta[base + 1]));
            circuit.push(GateOp::rx(q, theta[base + 2]));
        }
        if (n >= 2) {
            for (int q = 0; q < n; ++q) {
                circuit.push(GateOp::cnot(q, (q + 1) % n));
            }
        }
    }
    return circuit;
}

ParameterVector init_params(const AnsatzSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ParameterVector theta(static_cast<std::size_t>(param_count(spec)));
    for (double& value : theta) {
        // 53-bit mantissa draw in [0, 1); avoids distribution objects whose
        // output is not pinned down by the standard.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        value = u * 2.0 * std::numbers::pi;
    }
    return theta;
}

}  // namespace qfade
