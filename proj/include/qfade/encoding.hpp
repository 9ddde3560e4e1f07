#pragma once

#include <string>

#include "qfade/statevector.hpp"

namespace qfade {

/// Cycle window of the training split; fixes the affine feature map.
struct FeatureBounds {
    int min_cycle = 0;
    int max_cycle = 0;
};

/// Angle-encoding scheme writing one normalized scalar into every qubit.
///
/// Arc injects nonlinearity through an arcsin/arccos rotation pair per
/// qubit; Simple uses the single arccos rotation, whose angle lies in
/// [0, pi]. Arc is the default for training.
enum class EncodingMode { Arc, Simple };

struct EncodingSpec {
    int n_qubits = 1;
    EncodingMode mode = EncodingMode::Arc;
};

std::string to_string(EncodingMode mode);
EncodingMode encoding_mode_from_string(const std::string& name);

/// Affine map sending min_cycle -> -1 and max_cycle -> +1. Inputs outside
/// the window are clamped, so extrapolating a trained model a few cycles
/// past its data keeps every downstream angle defined.
double normalize_cycle(double cycle, const FeatureBounds& bounds);

/// Circuit preparing |psi_in> from a normalized feature x in [-1, 1].
/// Arc: RY(arcsin x) then RZ(arccos x^2) on each qubit.
/// Simple: RY(arccos x) on each qubit.
Circuit encoding_circuit(double x_norm, const EncodingSpec& spec);

}  // namespace qfade
