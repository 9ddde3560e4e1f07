#pragma once

#include <cstdint>
#include <vector>

#include "qfade/dataset.hpp"
#include "qfade/model.hpp"

namespace qfade {

enum class LossKind { Rmse };

struct TrainConfig {
    int max_iters = 200;
    double grad_tol = 1e-6;
    std::uint64_t seed = 0;  // echoed into reports; the loop itself is deterministic
    LossKind loss_kind = LossKind::Rmse;
    double armijo_c = 1e-4;
    double backtrack_factor = 0.5;
    int max_backtracks = 40;
    /// Worker threads for per-sample circuit evaluations. Results are
    /// reduced in sample order, so any thread count gives identical
    /// numbers.
    int threads = 1;
    /// When false only the affine head (out_scale, out_bias) moves;
    /// circuit parameters stay fixed.
    bool optimize_theta = true;
};

struct TrainReport {
    int iterations = 0;
    /// loss_history[0] is the loss of the initial model; one further
    /// entry per accepted BFGS iterate. Non-increasing by construction.
    std::vector<double> loss_history;
    double final_grad_norm = 0.0;
    double train_rmse = 0.0;
    double test_rmse = 0.0;
    double train_mape = 0.0;  // percent
    double test_mape = 0.0;   // percent
    double wall_time_seconds = 0.0;
};

struct TrainResult {
    QnnModel model;
    TrainReport report;
};

/// RMSE between measured capacities and the model's predictions.
double loss(const QnnModel& model, const CapacitySeries& data, int threads = 1);

/// Derivative of the loss with respect to [theta..., out_scale, out_bias]
/// (length param_count + 2). Circuit parameters use the parameter-shift
/// identity d<Z>/dt = (<Z>(t + pi/2) - <Z>(t - pi/2)) / 2, chained through
/// the squared error analytically; the affine head uses exact partials.
/// An exact zero loss returns the zero vector (the minimum is reached and
/// the RMSE chain factor is undefined there).
std::vector<double> gradient(const QnnModel& model, const CapacitySeries& data, int threads = 1);

/// Central-difference oracle over the same packed parameter layout.
std::vector<double> finite_diff_gradient(const QnnModel& model, const CapacitySeries& data,
                                         double step);

/// BFGS with backtracking Armijo line search. The inverse-Hessian
/// approximation starts at identity and the rank-two update is skipped
/// whenever the curvature product y's falls below 1e-10. Stops on
/// grad_tol, max_iters, or a failed line search; a failed search returns
/// the best iterate reached rather than erroring.
TrainResult train(const QnnModel& initial, const CapacitySeries& train_data,
                  const CapacitySeries& test_data, const TrainConfig& cfg);

}  // namespace qfade
