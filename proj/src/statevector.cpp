#include "qfade/statevector.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qfade {

namespace {

void require_index(int qubit, int n_qubits, const char* role) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw QubitIndexOutOfRange(std::string(role) + " qubit " + std::to_string(qubit) +
                                   " out of range for " + std::to_string(n_qubits) + "-qubit register");
    }
}

}  // namespace

GateOp GateOp::rx(int target, double angle) { return {GateKind::RX, target, -1, angle}; }
GateOp GateOp::ry(int target, double angle) { return {GateKind::RY, target, -1, angle}; }
GateOp GateOp::rz(int target, double angle) { return {GateKind::RZ, target, -1, angle}; }

GateOp GateOp::cnot(int control, int target) {
    if (control == target) {
        throw QubitIndexOutOfRange("CNOT control and target must differ (both " +
                                   std::to_string(target) + ")");
    }
    return {GateKind::CNOT, target, control, 0.0};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw QubitCountOutOfRange("circuit width " + std::to_string(n_qubits) +
                                   " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

Circuit& Circuit::push(const GateOp& gate) {
    require_index(gate.target, n_qubits_, "target");
    if (gate.kind == GateKind::CNOT) {
        require_index(gate.control, n_qubits_, "control");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw QubitCountMismatch("cannot append " + std::to_string(other.n_qubits_) +
                                 "-qubit circuit to " + std::to_string(n_qubits_) + "-qubit circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

GateMatrix gate_matrix(const GateOp& gate) {
    GateMatrix m;
    const double half = gate.angle / 2.0;
    const double c = std::cos(half);
    const double s = std::sin(half);
    switch (gate.kind) {
        case GateKind::RX:
            m.dim = 2;
            m.at(0, 0) = {c, 0.0};
            m.at(0, 1) = {0.0, -s};
            m.at(1, 0) = {0.0, -s};
            m.at(1, 1) = {c, 0.0};
            break;
        case GateKind::RY:
            m.dim = 2;
            m.at(0, 0) = {c, 0.0};
            m.at(0, 1) = {-s, 0.0};
            m.at(1, 0) = {s, 0.0};
            m.at(1, 1) = {c, 0.0};
            break;
        case GateKind::RZ:
            m.dim = 2;
            m.at(0, 0) = {c, -s};  // e^{-i angle/2}
            m.at(1, 1) = {c, s};
            break;
        case GateKind::CNOT:
            m.dim = 4;
            m.at(0, 0) = {1.0, 0.0};
            m.at(1, 1) = {1.0, 0.0};
            m.at(2, 3) = {1.0, 0.0};
            m.at(3, 2) = {1.0, 0.0};
            break;
    }
    return m;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw QubitCountOutOfRange("qubit count " + std::to_string(n_qubits) +
                                   " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::vector<cdouble> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw QubitCountOutOfRange("qubit count " + std::to_string(n_qubits) +
                                   " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw QubitCountMismatch("amplitude vector length " + std::to_string(amps_.size()) +
                                 " does not equal 2^" + std::to_string(n_qubits));
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("amplitude vector is not normalized");
    }
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cdouble& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

void StateVector::apply(const GateOp& gate) {
    require_index(gate.target, n_qubits_, "target");

    if (gate.kind == GateKind::CNOT) {
        require_index(gate.control, n_qubits_, "control");
        const std::size_t cmask = std::size_t{1} << gate.control;
        const std::size_t tmask = std::size_t{1} << gate.target;
        for (std::size_t k = 0; k < amps_.size(); ++k) {
            if ((k & cmask) && !(k & tmask)) {
                std::swap(amps_[k], amps_[k | tmask]);
            }
        }
        return;
    }

    const GateMatrix m = gate_matrix(gate);
    const cdouble m00 = m.at(0, 0), m01 = m.at(0, 1);
    const cdouble m10 = m.at(1, 0), m11 = m.at(1, 1);
    const std::size_t stride = std::size_t{1} << gate.target;
    // Visit the index pairs that differ only in the target bit.
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + stride;
            const cdouble a0 = amps_[i0];
            const cdouble a1 = amps_[i1];
            amps_[i0] = m00 * a0 + m01 * a1;
            amps_[i1] = m10 * a0 + m11 * a1;
        }
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw QubitCountMismatch("cannot apply " + std::to_string(circuit.n_qubits()) +
                                 "-qubit circuit to " + std::to_string(n_qubits_) + "-qubit state");
    }
    for (const GateOp& g : circuit.gates()) apply(g);
}

StateVector apply_gate(const StateVector& state, const GateOp& gate) {
    StateVector out = state;
    out.apply(gate);
    return out;
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
    StateVector out = state;
    out.apply(circuit);
    return out;
}

double expectation_z(const StateVector& state, int qubit) {
    require_index(qubit, state.n_qubits(), "readout");
    const std::size_t mask = std::size_t{1} << qubit;
    double value = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k) {
        const double p = std::norm(state.amplitude(k));
        value += (k & mask) ? -p : p;
    }
    return value;
}

}  // namespace qfade
