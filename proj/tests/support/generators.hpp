#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qfade/statevector.hpp"

// Seeded generators for property-style tests.
namespace qfade_test {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double random_angle(std::mt19937_64& rng) {
    // [-2*pi, 2*pi)
    return (uniform01(rng) - 0.5) * 4.0 * 3.14159265358979323846;
}

inline qfade::GateOp random_gate(std::mt19937_64& rng, int n_qubits) {
    const int n_kinds = n_qubits >= 2 ? 4 : 3;
    const int kind = static_cast<int>(rng() % static_cast<std::uint64_t>(n_kinds));
    const int target = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
    switch (kind) {
        case 0: return qfade::GateOp::rx(target, random_angle(rng));
        case 1: return qfade::GateOp::ry(target, random_angle(rng));
        case 2: return qfade::GateOp::rz(target, random_angle(rng));
        default: {
            int control = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
            while (control == target) {
                control = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
            }
            return qfade::GateOp::cnot(control, target);
        }
    }
}

inline qfade::Circuit random_circuit(std::mt19937_64& rng, int n_qubits, int n_gates) {
    qfade::Circuit circuit(n_qubits);
    for (int i = 0; i < n_gates; ++i) circuit.push(random_gate(rng, n_qubits));
    return circuit;
}

inline std::vector<qfade::cdouble> random_amplitudes(std::mt19937_64& rng, int n_qubits) {
    std::vector<qfade::cdouble> amps(std::size_t{1} << n_qubits);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = {uniform01(rng) - 0.5, uniform01(rng) - 0.5};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return amps;
}

inline qfade::StateVector random_state(std::mt19937_64& rng, int n_qubits) {
    return {n_qubits, random_amplitudes(rng, n_qubits)};
}

}  // namespace qfade_test
