#include "qfade/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "qfade/util.hpp"

namespace qfade {

TrainResult run_training(const CapacitySeries& series, const RunSpec& spec) {
    const SplitResult split = split_series(series, spec.train_fraction, spec.split_mode, spec.seed);
    const EncodingSpec encoding{spec.n_qubits, spec.encoding};
    const AnsatzSpec ansatz{spec.n_qubits, spec.depth};
    const QnnModel initial = make_initial_model(encoding, ansatz, split.train, spec.seed);
    TrainConfig cfg = spec.trainer;
    cfg.seed = spec.seed;
    return train(initial, split.train, split.test, cfg);
}

std::vector<SweepRow> run_sweep(const CapacitySeries& series, const SweepGrid& grid,
                                const RunSpec& base, int threads) {
    if (grid.qubit_values.empty() || grid.depth_values.empty() || grid.seeds.empty()) {
        throw std::invalid_argument("sweep grid axes must all be non-empty");
    }

    auto sorted_unique = [](auto values) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return values;
    };
    const std::vector<int> qubits = sorted_unique(grid.qubit_values);
    const std::vector<int> depths = sorted_unique(grid.depth_values);
    const std::vector<std::uint64_t> seeds = sorted_unique(grid.seeds);

    const std::size_t total = qubits.size() * depths.size() * seeds.size();
    if (total > static_cast<std::size_t>(grid.max_runs)) {
        throw std::invalid_argument("sweep grid has " + std::to_string(total) +
                                    " runs, above the cap of " + std::to_string(grid.max_runs) +
                                    " (raise --max-runs to allow it)");
    }

    std::vector<SweepRow> rows(total);
    std::size_t slot = 0;
    for (int q : qubits) {
        for (int d : depths) {
            for (std::uint64_t s : seeds) {
                rows[slot].qubits = q;
                rows[slot].depth = d;
                rows[slot].seed = s;
                ++slot;
            }
        }
    }

    auto execute = [&](SweepRow& row) {
        RunSpec spec = base;
        spec.n_qubits = row.qubits;
        spec.depth = row.depth;
        spec.seed = row.seed;
        try {
            const TrainResult result = run_training(series, spec);
            row.ok = true;
            row.train_rmse = result.report.train_rmse;
            row.test_rmse = result.report.test_rmse;
            row.train_mape = result.report.train_mape;
            row.test_mape = result.report.test_mape;
            row.iterations = result.report.iterations;
            row.seconds = result.report.wall_time_seconds;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    };

    if (threads <= 1 || rows.size() < 2) {
        for (SweepRow& row : rows) execute(row);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t index = next.fetch_add(1);
                if (index >= rows.size()) return;
                execute(rows[index]);
            }
        };
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(threads, rows.size());
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return rows;  // slots were laid out in (qubits, depth, seed) order
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "qubits,depth,seed,status,train_rmse,test_rmse,train_mape,test_mape,iters,seconds\n";
    for (const SweepRow& row : rows) {
        out << row.qubits << "," << row.depth << "," << row.seed << ",";
        if (row.ok) {
            out << "ok," << double_repr(row.train_rmse) << "," << double_repr(row.test_rmse) << ","
                << double_repr(row.train_mape) << "," << double_repr(row.test_mape) << ","
                << row.iterations << "," << double_repr(row.seconds);
        } else {
            out << "failed,,,,,,";
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace qfade
