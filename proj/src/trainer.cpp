#include "qfade/trainer.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "qfade/metrics.hpp"

namespace qfade {

namespace {

/// Per-dataset evaluation state: encoded input states never change while
/// theta moves, so they are prepared once per training call.
struct EvalContext {
    AnsatzSpec ansatz;
    int readout_qubit = 0;
    std::vector<StateVector> inputs;
    std::vector<double> targets;
    int threads = 1;
};

EvalContext make_context(const QnnModel& model, const CapacitySeries& data, int threads) {
    if (data.records.empty()) {
        throw EmptyDataset("dataset for battery '" + data.battery_id + "' has no records");
    }
    validate_model(model);

    EvalContext ctx;
    ctx.ansatz = model.ansatz;
    ctx.readout_qubit = model.readout_qubit;
    ctx.threads = threads;
    ctx.inputs.reserve(data.records.size());
    ctx.targets.reserve(data.records.size());
    for (const CapacityRecord& r : data.records) {
        const double x = normalize_cycle(r.cycle, model.feature_bounds);
        StateVector state(model.encoding.n_qubits);
        state.apply(encoding_circuit(x, model.encoding));
        ctx.inputs.push_back(std::move(state));
        ctx.targets.push_back(r.capacity_ah);
    }
    return ctx;
}

/// <Z_readout> of `circuit` applied to every prepared input. Each entry
/// depends only on its own input, so chunks may run on worker threads;
/// the returned order is always sample order.
std::vector<double> eval_all(const EvalContext& ctx, const Circuit& circuit) {
    std::vector<double> out(ctx.inputs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            StateVector state = ctx.inputs[i];
            state.apply(circuit);
            out[i] = expectation_z(state, ctx.readout_qubit);
        }
    };

    const std::size_t n = out.size();
    if (ctx.threads <= 1 || n < 8) {
        work(0, n);
        return out;
    }
    const std::size_t workers = std::min<std::size_t>(ctx.threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(work, begin, end);
    }
    for (std::thread& t : pool) t.join();
    return out;
}

// Packed parameter layout: [theta[0..P), out_scale, out_bias].

ParameterVector theta_of(const std::vector<double>& packed) {
    return ParameterVector(packed.begin(), packed.end() - 2);
}

std::vector<double> pack(const QnnModel& model) {
    std::vector<double> p(model.theta.begin(), model.theta.end());
    p.push_back(model.out_scale);
    p.push_back(model.out_bias);
    return p;
}

void unpack_into(QnnModel& model, const std::vector<double>& packed) {
    model.theta.assign(packed.begin(), packed.end() - 2);
    model.out_scale = packed[packed.size() - 2];
    model.out_bias = packed[packed.size() - 1];
}

double loss_packed(const EvalContext& ctx, const std::vector<double>& packed) {
    const double scale = packed[packed.size() - 2];
    const double bias = packed[packed.size() - 1];
    const std::vector<double> raw = eval_all(ctx, ansatz_circuit(ctx.ansatz, theta_of(packed)));
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double r = scale * raw[i] + bias - ctx.targets[i];
        sum_sq += r * r;
    }
    return std::sqrt(sum_sq / static_cast<double>(raw.size()));
}

std::vector<double> gradient_packed(const EvalContext& ctx, const std::vector<double>& packed) {
    const std::size_t n_params = packed.size() - 2;
    const double scale = packed[packed.size() - 2];
    const double bias = packed[packed.size() - 1];
    const double n = static_cast<double>(ctx.inputs.size());

    ParameterVector theta = theta_of(packed);
    const std::vector<double> raw = eval_all(ctx, ansatz_circuit(ctx.ansatz, theta));

    std::vector<double> residual(raw.size());
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        residual[i] = scale * raw[i] + bias - ctx.targets[i];
        sum_sq += residual[i] * residual[i];
    }
    const double rmse_value = std::sqrt(sum_sq / n);

    std::vector<double> grad(packed.size(), 0.0);
    if (rmse_value == 0.0) {
        return grad;  // exact fit: minimum reached, chain factor undefined
    }
    // d RMSE / dp = (1 / (2 RMSE)) d MSE / dp.
    const double chain = 1.0 / (rmse_value * n);

    constexpr double shift = std::numbers::pi / 2.0;
    for (std::size_t k = 0; k < n_params; ++k) {
        const double saved = theta[k];
        theta[k] = saved + shift;
        const std::vector<double> plus = eval_all(ctx, ansatz_circuit(ctx.ansatz, theta));
        theta[k] = saved - shift;
        const std::vector<double> minus = eval_all(ctx, ansatz_circuit(ctx.ansatz, theta));
        theta[k] = saved;

        double acc = 0.0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            acc += residual[i] * (plus[i] - minus[i]) / 2.0;
        }
        grad[k] = scale * chain * acc;
    }

    double acc_scale = 0.0;
    double acc_bias = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        acc_scale += residual[i] * raw[i];
        acc_bias += residual[i];
    }
    grad[n_params] = chain * acc_scale;
    grad[n_params + 1] = chain * acc_bias;
    return grad;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

/// Dense symmetric inverse-Hessian approximation.
class InverseHessian {
public:
    explicit InverseHessian(std::size_t dim) : dim_(dim) { reset(); }

    void reset() {
        h_.assign(dim_ * dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i) h_[i * dim_ + i] = 1.0;
    }

    std::vector<double> multiply(const std::vector<double>& v) const {
        std::vector<double> out(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i) {
            double sum = 0.0;
            const double* row = &h_[i * dim_];
            for (std::size_t j = 0; j < dim_; ++j) sum += row[j] * v[j];
            out[i] = sum;
        }
        return out;
    }

    /// H <- (I - rho s y') H (I - rho y s') + rho s s', expanded to
    /// H - rho (s (Hy)' + (Hy) s') + (rho^2 y'Hy + rho) s s'.
    void update(const std::vector<double>& s, const std::vector<double>& y, double rho) {
        const std::vector<double> hy = multiply(y);
        const double y_h_y = dot(y, hy);
        const double ss_coeff = rho * rho * y_h_y + rho;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                h_[i * dim_ + j] += ss_coeff * s[i] * s[j] - rho * (s[i] * hy[j] + hy[i] * s[j]);
            }
        }
    }

private:
    std::size_t dim_;
    std::vector<double> h_;
};

}  // namespace

double loss(const QnnModel& model, const CapacitySeries& data, int threads) {
    const EvalContext ctx = make_context(model, data, threads);
    return loss_packed(ctx, pack(model));
}

std::vector<double> gradient(const QnnModel& model, const CapacitySeries& data, int threads) {
    const EvalContext ctx = make_context(model, data, threads);
    return gradient_packed(ctx, pack(model));
}

std::vector<double> finite_diff_gradient(const QnnModel& model, const CapacitySeries& data,
                                         double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    const EvalContext ctx = make_context(model, data, 1);
    std::vector<double> packed = pack(model);
    std::vector<double> grad(packed.size(), 0.0);
    for (std::size_t k = 0; k < packed.size(); ++k) {
        const double saved = packed[k];
        packed[k] = saved + step;
        const double f_plus = loss_packed(ctx, packed);
        packed[k] = saved - step;
        const double f_minus = loss_packed(ctx, packed);
        packed[k] = saved;
        grad[k] = (f_plus - f_minus) / (2.0 * step);
    }
    return grad;
}

TrainResult train(const QnnModel& initial, const CapacitySeries& train_data,
                  const CapacitySeries& test_data, const TrainConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    if (train_data.records.empty()) {
        throw EmptyDataset("training split is empty");
    }
    if (test_data.records.empty()) {
        throw EmptyDataset("test split is empty");
    }

    const EvalContext ctx = make_context(initial, train_data, cfg.threads);
    const std::size_t n_theta = initial.theta.size();

    auto masked_gradient = [&](const std::vector<double>& packed) {
        std::vector<double> g = gradient_packed(ctx, packed);
        if (!cfg.optimize_theta) {
            for (std::size_t k = 0; k < n_theta; ++k) g[k] = 0.0;
        }
        if (!all_finite(g)) {
            throw NonFiniteLoss("gradient is not finite");
        }
        return g;
    };

    std::vector<double> p = pack(initial);
    double f = loss_packed(ctx, p);
    if (!std::isfinite(f)) {
        throw NonFiniteLoss("initial loss is not finite (" + std::to_string(f) + ")");
    }
    std::vector<double> g = masked_gradient(p);
    double grad_norm = norm2(g);

    TrainReport report;
    report.loss_history.push_back(f);

    InverseHessian hessian(p.size());
    int iterations = 0;

    while (iterations < cfg.max_iters && grad_norm >= cfg.grad_tol) {
        std::vector<double> direction = hessian.multiply(g);
        for (double& d : direction) d = -d;
        double slope = dot(direction, g);
        if (slope >= 0.0) {
            // Not a descent direction; fall back to steepest descent.
            hessian.reset();
            for (std::size_t i = 0; i < p.size(); ++i) direction[i] = -g[i];
            slope = -dot(g, g);
            if (slope == 0.0) break;
        }

        double alpha = 1.0;
        bool accepted = false;
        std::vector<double> p_next(p.size());
        double f_next = f;
        for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
            for (std::size_t i = 0; i < p.size(); ++i) p_next[i] = p[i] + alpha * direction[i];
            f_next = loss_packed(ctx, p_next);
            if (std::isfinite(f_next) && f_next <= f + cfg.armijo_c * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= cfg.backtrack_factor;
        }
        if (!accepted) {
            break;  // flat landscape: keep the best iterate reached
        }

        std::vector<double> g_next = masked_gradient(p_next);

        std::vector<double> s(p.size());
        std::vector<double> y(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            s[i] = p_next[i] - p[i];
            y[i] = g_next[i] - g[i];
        }
        const double ys = dot(y, s);
        if (ys > 1e-10) {
            hessian.update(s, y, 1.0 / ys);
        }

        p = std::move(p_next);
        f = f_next;
        g = std::move(g_next);
        grad_norm = norm2(g);
        report.loss_history.push_back(f);
        ++iterations;
    }

    TrainResult result;
    result.model = initial;
    unpack_into(result.model, p);

    report.iterations = iterations;
    report.final_grad_norm = grad_norm;

    auto metric_pair = [&](const CapacitySeries& data) {
        std::vector<int> cycles;
        std::vector<double> measured;
        cycles.reserve(data.records.size());
        measured.reserve(data.records.size());
        for (const CapacityRecord& r : data.records) {
            cycles.push_back(r.cycle);
            measured.push_back(r.capacity_ah);
        }
        const std::vector<double> predicted = predict_batch(result.model, cycles);
        return evaluate(measured, predicted);
    };
    const MetricPair on_train = metric_pair(train_data);
    const MetricPair on_test = metric_pair(test_data);
    report.train_rmse = on_train.rmse;
    report.train_mape = on_train.mape;
    report.test_rmse = on_test.rmse;
    report.test_mape = on_test.mape;

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    result.report = report;
    return result;
}

}  // namespace qfade
