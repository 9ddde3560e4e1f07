#include "support/dense_oracle.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace qfade_test {

using qfade::cdouble;

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m;
    m.dim = dim;
    m.elems.assign(dim * dim, cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = {1.0, 0.0};
    return m;
}

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    DenseMatrix out;
    out.dim = lhs.dim;
    out.elems.assign(out.dim * out.dim, cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < out.dim; ++i) {
        for (std::size_t k = 0; k < out.dim; ++k) {
            const cdouble lik = lhs.at(i, k);
            if (lik == cdouble{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < out.dim; ++j) {
                out.at(i, j) += lik * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<cdouble> apply(const DenseMatrix& m, const std::vector<cdouble>& v) {
    std::vector<cdouble> out(v.size(), cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < m.dim; ++i) {
        cdouble sum{0.0, 0.0};
        for (std::size_t j = 0; j < m.dim; ++j) sum += m.at(i, j) * v[j];
        out[i] = sum;
    }
    return out;
}

namespace {

std::array<cdouble, 4> rotation_2x2(const qfade::GateOp& gate) {
    const double c = std::cos(gate.angle / 2.0);
    const double s = std::sin(gate.angle / 2.0);
    switch (gate.kind) {
        case qfade::GateKind::RX:
            return {cdouble{c, 0.0}, cdouble{0.0, -s}, cdouble{0.0, -s}, cdouble{c, 0.0}};
        case qfade::GateKind::RY:
            return {cdouble{c, 0.0}, cdouble{-s, 0.0}, cdouble{s, 0.0}, cdouble{c, 0.0}};
        case qfade::GateKind::RZ:
            return {std::polar(1.0, -gate.angle / 2.0), cdouble{0.0, 0.0}, cdouble{0.0, 0.0},
                    std::polar(1.0, gate.angle / 2.0)};
        default:
            throw std::logic_error("not a rotation gate");
    }
}

int bit_of(std::size_t index, int qubit) { return static_cast<int>((index >> qubit) & 1u); }

}  // namespace

DenseMatrix embed_gate(const qfade::GateOp& gate, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m;
    m.dim = dim;
    m.elems.assign(dim * dim, cdouble{0.0, 0.0});

    if (gate.kind == qfade::GateKind::CNOT) {
        // Permutation: flip the target bit where the control bit is set.
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t row = col;
            if (bit_of(col, gate.control) == 1) {
                row = col ^ (std::size_t{1} << gate.target);
            }
            m.at(row, col) = {1.0, 0.0};
        }
        return m;
    }

    const std::array<cdouble, 4> u = rotation_2x2(gate);
    const std::size_t target_mask = std::size_t{1} << gate.target;
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((row & ~target_mask) != (col & ~target_mask)) continue;
            m.at(row, col) = u[static_cast<std::size_t>(bit_of(row, gate.target)) * 2 +
                              static_cast<std::size_t>(bit_of(col, gate.target))];
        }
    }
    return m;
}

DenseMatrix circuit_unitary(const qfade::Circuit& circuit) {
    DenseMatrix total = DenseMatrix::identity(std::size_t{1} << circuit.n_qubits());
    for (const qfade::GateOp& gate : circuit.gates()) {
        total = multiply(embed_gate(gate, circuit.n_qubits()), total);
    }
    return total;
}

std::vector<cdouble> oracle_apply_circuit(const qfade::Circuit& circuit,
                                          const std::vector<cdouble>& input) {
    return apply(circuit_unitary(circuit), input);
}

double oracle_expectation_z(const std::vector<cdouble>& amplitudes, int qubit) {
    double value = 0.0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        const double p = std::norm(amplitudes[k]);
        value += bit_of(k, qubit) ? -p : p;
    }
    return value;
}

}  // namespace qfade_test
