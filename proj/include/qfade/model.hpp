#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "qfade/ansatz.hpp"
#include "qfade/dataset.hpp"
#include "qfade/encoding.hpp"

namespace qfade {

inline constexpr int kModelSchemaVersion = 1;

/// Full regression function: encoding circuit, trainable circuit, Z
/// readout, and an affine head mapping <Z> in [-1, 1] to capacity in Ah.
/// Values are immutable in use; concurrent predictions over a shared
/// model are safe.
struct QnnModel {
    EncodingSpec encoding;
    AnsatzSpec ansatz;
    ParameterVector theta;
    int readout_qubit = 0;
    double out_scale = 1.0;  // Ah per unit <Z>
    double out_bias = 0.0;   // Ah
    FeatureBounds feature_bounds;
};

/// Throws if the model's pieces do not fit together (widths, theta
/// length, readout index, bounds window).
void validate_model(const QnnModel& model);

/// <Z_readout> of ansatz(theta) applied to the encoded input state.
double raw_expectation(const QnnModel& model, double x_norm);

/// out_scale * raw_expectation(normalize_cycle(cycle)) + out_bias.
/// Out-of-window cycles are clamped by the feature map, so every cycle
/// yields a finite capacity.
double predict_one(const QnnModel& model, int cycle);

std::vector<double> predict_batch(const QnnModel& model, const std::vector<int>& cycles);

/// Fresh model for a training split: seeded parameter draw, affine head
/// scaled to the split's capacity range (scale = half the capacity span,
/// bias = mean capacity), readout on qubit 1 when the register has one.
QnnModel make_initial_model(const EncodingSpec& encoding, const AnsatzSpec& ansatz,
                            const CapacitySeries& train_data, std::uint64_t seed);

/// Versioned JSON document; round-trips every field bit-exactly.
/// Unknown fields are rejected.
void save_model(const QnnModel& model, const std::filesystem::path& path);
QnnModel load_model(const std::filesystem::path& path);

}  // namespace qfade
