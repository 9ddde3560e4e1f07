#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qfade/errors.hpp"

namespace qfade {

using cdouble = std::complex<double>;

/// Hard cap on register width. 2^20 amplitudes (~16 MB) is the largest
/// state this library will allocate.
inline constexpr int kMaxQubits = 20;

enum class GateKind { RX, RY, RZ, CNOT };

/// One gate application. Rotation gates carry an angle in radians and act
/// on `target`; CNOT carries a control index and no angle.
struct GateOp {
    GateKind kind;
    int target = 0;
    int control = -1;  // CNOT only
    double angle = 0.0;

    static GateOp rx(int target, double angle);
    static GateOp ry(int target, double angle);
    static GateOp rz(int target, double angle);
    static GateOp cnot(int control, int target);

    bool is_rotation() const { return kind != GateKind::CNOT; }
};

/// Ordered gate sequence over a fixed register width. Gate indices are
/// validated on insertion, so a constructed Circuit is always applicable
/// to a state of matching width.
class Circuit {
public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    Circuit& push(const GateOp& gate);
    /// Concatenation; sequential application of `a` then `b` equals
    /// applying `a.append(b)`.
    Circuit& append(const Circuit& other);

private:
    int n_qubits_;
    std::vector<GateOp> gates_;
};

/// Dense row-major complex matrix of a single gate: 2x2 for rotations,
/// 4x4 for CNOT. The CNOT matrix indexes its two-qubit basis as
/// m = 2*control_bit + target_bit.
struct GateMatrix {
    int dim = 2;
    std::array<cdouble, 16> elems{};

    cdouble at(int row, int col) const { return elems[row * dim + col]; }
    cdouble& at(int row, int col) { return elems[row * dim + col]; }
};

GateMatrix gate_matrix(const GateOp& gate);

/// 2^n complex amplitudes of an n-qubit register. Qubit j is bit j of the
/// basis-state index (qubit 0 is the least significant bit).
class StateVector {
public:
    /// |0...0>
    explicit StateVector(int n_qubits);
    /// Arbitrary state; `amplitudes` must have length 2^n_qubits and unit
    /// norm within 1e-10.
    StateVector(int n_qubits, std::vector<cdouble> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cdouble>& amplitudes() const { return amps_; }
    cdouble amplitude(std::size_t basis_index) const { return amps_[basis_index]; }

    double norm() const;

    /// In-place gate application, O(2^n): rotations update the stride-paired
    /// amplitudes of the target bit, CNOT swaps the control-selected pairs.
    void apply(const GateOp& gate);
    void apply(const Circuit& circuit);

private:
    int n_qubits_;
    std::vector<cdouble> amps_;
};

StateVector apply_gate(const StateVector& state, const GateOp& gate);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// <Z_qubit>: sum of |amplitude|^2 signed + where the qubit's bit is 0,
/// - where it is 1. Always in [-1, 1] for a normalized state.
double expectation_z(const StateVector& state, int qubit);

}  // namespace qfade
