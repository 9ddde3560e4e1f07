#pragma once

#include <cstdint>
#include <vector>

#include "qfade/statevector.hpp"

namespace qfade {

using ParameterVector = std::vector<double>;

/// Trainable-circuit shape: `depth` layers, each a rotation triple per
/// qubit followed by a CNOT ring.
struct AnsatzSpec {
    int n_qubits = 1;
    int depth = 1;
};

/// 3 * n_qubits * depth: one RX-RZ-RX triple per qubit per layer.
int param_count(const AnsatzSpec& spec);

/// Layer l, qubit j consumes theta[3*(l*n + j) + {0,1,2}] as RX, RZ, RX
/// angles. After the rotations of a layer, CNOT(j, (j+1) mod n) runs for
/// every j when n >= 2; a single qubit has no entangler. The RX-RZ-RX
/// triple reaches any single-qubit rotation up to phase.
Circuit ansatz_circuit(const AnsatzSpec& spec, const ParameterVector& theta);

/// Seeded i.i.d. Uniform[0, 2*pi) draws, one per parameter. The generator
/// consumes raw mt19937_64 output so the same seed gives the same vector
/// on every platform.
ParameterVector init_params(const AnsatzSpec& spec, std::uint64_t seed);

}  // namespace qfade
