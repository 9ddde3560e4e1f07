#pragma once

#include <vector>

#include "qfade/statevector.hpp"

// Brute-force reference for the statevector simulator: every gate is
// embedded as a full 2^n x 2^n matrix from its own textbook definition,
// the circuit becomes an explicit matrix chain product, and states are
// propagated by dense matrix-vector multiplication. Deliberately slow and
// deliberately independent of the stride kernels under test.
namespace qfade_test {

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<qfade::cdouble> elems;  // row-major

    static DenseMatrix identity(std::size_t dim);
    qfade::cdouble at(std::size_t row, std::size_t col) const { return elems[row * dim + col]; }
    qfade::cdouble& at(std::size_t row, std::size_t col) { return elems[row * dim + col]; }
};

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs);
std::vector<qfade::cdouble> apply(const DenseMatrix& m, const std::vector<qfade::cdouble>& v);

/// Full-register unitary of a single gate (tensor-product extension).
DenseMatrix embed_gate(const qfade::GateOp& gate, int n_qubits);

/// M_k * ... * M_1 for a k-gate circuit.
DenseMatrix circuit_unitary(const qfade::Circuit& circuit);

std::vector<qfade::cdouble> oracle_apply_circuit(const qfade::Circuit& circuit,
                                                 const std::vector<qfade::cdouble>& input);

double oracle_expectation_z(const std::vector<qfade::cdouble>& amplitudes, int qubit);

}  // namespace qfade_test
