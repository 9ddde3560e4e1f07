#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qfade/dataset.hpp"
#include "qfade/trainer.hpp"

namespace qfade {

/// Everything that defines one training run on a full series.
struct RunSpec {
    int n_qubits = 4;
    int depth = 3;
    EncodingMode encoding = EncodingMode::Arc;
    double train_fraction = 0.8;
    SplitMode split_mode = SplitMode::Chrono;
    std::uint64_t seed = 1;
    TrainConfig trainer;
};

/// Split, initialize, train. The seed drives both the parameter draw and
/// the random split (when selected).
TrainResult run_training(const CapacitySeries& series, const RunSpec& spec);

/// Hyperparameter grid; the run count (qubits x depths x seeds) is capped
/// to keep an accidental wildcard from burning a desk machine.
struct SweepGrid {
    std::vector<int> qubit_values;
    std::vector<int> depth_values;
    std::vector<std::uint64_t> seeds;
    int max_runs = 64;
};

struct SweepRow {
    int qubits = 0;
    int depth = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;  // empty when ok
    double train_rmse = 0.0;
    double test_rmse = 0.0;
    double train_mape = 0.0;
    double test_mape = 0.0;
    int iterations = 0;
    double seconds = 0.0;
};

/// One run per grid point. Runs may execute on `threads` workers; rows
/// come back sorted by (qubits, depth, seed) regardless of completion
/// order. A failed run becomes a row with ok == false.
std::vector<SweepRow> run_sweep(const CapacitySeries& series, const SweepGrid& grid,
                                const RunSpec& base, int threads);

/// Header: qubits,depth,seed,status,train_rmse,test_rmse,train_mape,test_mape,iters,seconds
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace qfade
