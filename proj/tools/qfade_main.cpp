#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfade/experiment.hpp"
#include "qfade/metrics.hpp"
#include "qfade/util.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct TrainArgs {
    std::string data;
    int qubits = 4;
    int depth = 3;
    double train_frac = 0.8;
    std::string encoding = "arc";
    std::string split_mode = "chrono";
    std::uint64_t seed = 1;
    int threads = 1;
    int max_iters = 200;
    double grad_tol = 1e-6;
    std::string out = "model.json";
    std::string report = "report.json";
};

struct PredictArgs {
    std::string model;
    std::string cycles_range;
    std::string data;
    std::string out;
};

struct EvalArgs {
    std::string model;
    std::string data;
    double train_frac = 0.8;
    std::string split_mode = "chrono";
    std::uint64_t seed = 1;
    std::string out;
};

struct SweepArgs {
    std::string data;
    std::vector<int> qubits;
    std::vector<int> depths;
    std::vector<std::uint64_t> seeds;
    double train_frac = 0.8;
    std::string encoding = "arc";
    std::string split_mode = "chrono";
    int threads = 1;
    int max_iters = 200;
    int max_runs = 64;
    std::string out = "sweep.csv";
};

std::string check_fraction(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    auto [ptr, ec] = std::from_chars(first, first + text.size(), value);
    if (ec != std::errc{} || ptr != first + text.size() || !(value > 0.0 && value < 1.0)) {
        return "train fraction must lie strictly between 0 and 1";
    }
    return {};
}

std::string check_cycle_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return "expected a range like 1..200";
    int lo = 0, hi = 0;
    const char* s = text.data();
    auto a = std::from_chars(s, s + dots, lo);
    auto b = std::from_chars(s + dots + 2, s + text.size(), hi);
    if (a.ec != std::errc{} || a.ptr != s + dots || b.ec != std::errc{} ||
        b.ptr != s + text.size()) {
        return "expected a range like 1..200";
    }
    if (lo < 1 || hi < lo) return "range must satisfy 1 <= first <= last";
    return {};
}

std::pair<int, int> parse_cycle_range(const std::string& text) {
    const auto dots = text.find("..");
    int lo = 0, hi = 0;
    std::from_chars(text.data(), text.data() + dots, lo);
    std::from_chars(text.data() + dots + 2, text.data() + text.size(), hi);
    return {lo, hi};
}

json config_echo(const TrainArgs& args) {
    const qfade::TrainConfig defaults;
    return json{{"data", args.data},
                {"qubits", args.qubits},
                {"depth", args.depth},
                {"train_frac", args.train_frac},
                {"encoding", args.encoding},
                {"split_mode", args.split_mode},
                {"seed", args.seed},
                {"threads", args.threads},
                {"max_iters", args.max_iters},
                {"grad_tol", args.grad_tol},
                {"loss", "rmse"},
                {"armijo_c", defaults.armijo_c},
                {"backtrack_factor", defaults.backtrack_factor},
                {"max_backtracks", defaults.max_backtracks}};
}

void print_metrics(std::ostream& os, const char* label, double rmse_ah, double mape_pct) {
    os << label << " RMSE " << std::setprecision(6) << rmse_ah << " Ah, MAPE "
       << std::setprecision(4) << mape_pct << " %\n";
}

int cmd_train(const TrainArgs& args) {
    const qfade::CapacitySeries series = qfade::load_csv(args.data);

    qfade::RunSpec spec;
    spec.n_qubits = args.qubits;
    spec.depth = args.depth;
    spec.encoding = qfade::encoding_mode_from_string(args.encoding);
    spec.train_fraction = args.train_frac;
    spec.split_mode = qfade::split_mode_from_string(args.split_mode);
    spec.seed = args.seed;
    spec.trainer.max_iters = args.max_iters;
    spec.trainer.grad_tol = args.grad_tol;
    spec.trainer.threads = args.threads;

    const qfade::TrainResult result = qfade::run_training(series, spec);
    qfade::save_model(result.model, args.out);

    // Wall time stays on stdout: the report file must be identical when a
    // seeded run is repeated.
    json report;
    report["schema_version"] = 1;
    report["config"] = config_echo(args);
    report["iterations"] = result.report.iterations;
    report["loss_history"] = result.report.loss_history;
    report["final_grad_norm"] = result.report.final_grad_norm;
    report["train_rmse"] = result.report.train_rmse;
    report["train_mape"] = result.report.train_mape;
    report["test_rmse"] = result.report.test_rmse;
    report["test_mape"] = result.report.test_mape;

    std::ofstream out(args.report, std::ios::trunc);
    if (!out) throw qfade::IoError("cannot open " + args.report + " for writing");
    out << report.dump(2) << "\n";
    if (!out) throw qfade::IoError("failed writing " + args.report);

    std::cout << "battery " << series.battery_id << ": trained " << args.qubits << " qubits, depth "
              << args.depth << ", " << result.report.iterations << " iterations, "
              << std::setprecision(3) << result.report.wall_time_seconds << " s\n";
    print_metrics(std::cout, "train", result.report.train_rmse, result.report.train_mape);
    print_metrics(std::cout, "test ", result.report.test_rmse, result.report.test_mape);
    std::cout << "model  -> " << args.out << "\n";
    std::cout << "report -> " << args.report << "\n";
    return kExitOk;
}

int cmd_predict(const PredictArgs& args) {
    if (args.cycles_range.empty() == args.data.empty()) {
        std::cerr << "predict needs exactly one of --cycles or --data\n";
        return kExitUsage;
    }
    const qfade::QnnModel model = qfade::load_model(args.model);

    std::ostringstream csv;
    if (!args.data.empty()) {
        const qfade::CapacitySeries series = qfade::load_csv(args.data);
        csv << "cycle,measured_ah,predicted_ah\n";
        for (const qfade::CapacityRecord& r : series.records) {
            csv << r.cycle << "," << qfade::double_repr(r.capacity_ah) << ","
                << qfade::double_repr(qfade::predict_one(model, r.cycle)) << "\n";
        }
    } else {
        const auto [lo, hi] = parse_cycle_range(args.cycles_range);
        csv << "cycle,predicted_ah\n";
        for (int c = lo; c <= hi; ++c) {
            csv << c << "," << qfade::double_repr(qfade::predict_one(model, c)) << "\n";
        }
    }

    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(args.out, std::ios::trunc);
        if (!out) throw qfade::IoError("cannot open " + args.out + " for writing");
        out << csv.str();
        if (!out) throw qfade::IoError("failed writing " + args.out);
    }
    return kExitOk;
}

int cmd_eval(const EvalArgs& args) {
    const qfade::QnnModel model = qfade::load_model(args.model);
    const qfade::CapacitySeries series = qfade::load_csv(args.data);
    const qfade::SplitResult split = qfade::split_series(
        series, args.train_frac, qfade::split_mode_from_string(args.split_mode), args.seed);

    auto metric_pair = [&](const qfade::CapacitySeries& slice) {
        std::vector<int> cycles;
        std::vector<double> measured;
        for (const qfade::CapacityRecord& r : slice.records) {
            cycles.push_back(r.cycle);
            measured.push_back(r.capacity_ah);
        }
        return qfade::evaluate(measured, qfade::predict_batch(model, cycles));
    };
    const qfade::MetricPair on_train = metric_pair(split.train);
    const qfade::MetricPair on_test = metric_pair(split.test);

    print_metrics(std::cout, "train", on_train.rmse, on_train.mape);
    print_metrics(std::cout, "test ", on_test.rmse, on_test.mape);

    if (!args.out.empty()) {
        json doc;
        doc["train"] = {{"rmse", on_train.rmse}, {"mape", on_train.mape}};
        doc["test"] = {{"rmse", on_test.rmse}, {"mape", on_test.mape}};
        std::ofstream out(args.out, std::ios::trunc);
        if (!out) throw qfade::IoError("cannot open " + args.out + " for writing");
        out << doc.dump(2) << "\n";
        if (!out) throw qfade::IoError("failed writing " + args.out);
    }
    return kExitOk;
}

int cmd_sweep(const SweepArgs& args) {
    const qfade::CapacitySeries series = qfade::load_csv(args.data);

    qfade::SweepGrid grid;
    grid.qubit_values = args.qubits;
    grid.depth_values = args.depths;
    grid.seeds = args.seeds;
    grid.max_runs = args.max_runs;

    const std::size_t total = args.qubits.size() * args.depths.size() * args.seeds.size();
    if (total > static_cast<std::size_t>(args.max_runs)) {
        std::cerr << "sweep grid has " << total << " runs, above the cap of " << args.max_runs
                  << "; raise --max-runs if this is intended\n";
        return kExitUsage;
    }

    qfade::RunSpec base;
    base.encoding = qfade::encoding_mode_from_string(args.encoding);
    base.train_fraction = args.train_frac;
    base.split_mode = qfade::split_mode_from_string(args.split_mode);
    base.trainer.max_iters = args.max_iters;
    base.trainer.threads = 1;  // parallelism is across runs here

    const std::vector<qfade::SweepRow> rows = qfade::run_sweep(series, grid, base, args.threads);
    qfade::write_sweep_csv(rows, args.out);

    std::size_t failed = 0;
    for (const qfade::SweepRow& row : rows) {
        if (!row.ok) {
            ++failed;
            std::cerr << "run (qubits=" << row.qubits << ", depth=" << row.depth
                      << ", seed=" << row.seed << ") failed: " << row.error << "\n";
        }
    }
    std::cout << rows.size() - failed << "/" << rows.size() << " runs succeeded -> " << args.out
              << "\n";
    return failed == rows.size() ? kExitRuntime : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-circuit regression for lithium-ion capacity fade"};
    app.require_subcommand(1);

    TrainArgs train_args;
    CLI::App* train_cmd = app.add_subcommand("train", "Fit a model to a capacity CSV");
    train_cmd->add_option("--data", train_args.data, "capacity CSV file")->required();
    train_cmd->add_option("--qubits", train_args.qubits, "register width")
        ->check(CLI::Range(1, 20));
    train_cmd->add_option("--depth", train_args.depth, "ansatz layers")->check(CLI::Range(1, 64));
    train_cmd->add_option("--train-frac", train_args.train_frac, "training fraction (default 0.8)")
        ->check(CLI::Validator(check_fraction, "FRACTION"));
    train_cmd->add_option("--encoding", train_args.encoding, "arc|simple")
        ->check(CLI::IsMember({"arc", "simple"}));
    train_cmd->add_option("--split-mode", train_args.split_mode, "chrono|random")
        ->check(CLI::IsMember({"chrono", "random"}));
    train_cmd->add_option("--seed", train_args.seed, "seed for init and random split");
    train_cmd->add_option("--threads", train_args.threads, "gradient worker threads")
        ->check(CLI::Range(1, 256));
    train_cmd->add_option("--max-iters", train_args.max_iters, "BFGS iteration cap")
        ->check(CLI::Range(1, 100000));
    train_cmd->add_option("--grad-tol", train_args.grad_tol, "gradient-norm stop threshold");
    train_cmd->add_option("--out", train_args.out, "model file to write");
    train_cmd->add_option("--report", train_args.report, "report JSON to write");

    PredictArgs predict_args;
    CLI::App* predict_cmd = app.add_subcommand("predict", "Predict capacity from a saved model");
    predict_cmd->add_option("--model", predict_args.model, "model JSON file")->required();
    predict_cmd->add_option("--cycles", predict_args.cycles_range, "cycle range, e.g. 1..200")
        ->check(CLI::Validator(check_cycle_range, "RANGE"));
    predict_cmd->add_option("--data", predict_args.data, "capacity CSV to overlay");
    predict_cmd->add_option("--out", predict_args.out, "output CSV (stdout when omitted)");

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Score a saved model on a capacity CSV");
    eval_cmd->add_option("--model", eval_args.model, "model JSON file")->required();
    eval_cmd->add_option("--data", eval_args.data, "capacity CSV file")->required();
    eval_cmd->add_option("--train-frac", eval_args.train_frac, "fraction used when training")
        ->check(CLI::Validator(check_fraction, "FRACTION"));
    eval_cmd->add_option("--split-mode", eval_args.split_mode, "chrono|random")
        ->check(CLI::IsMember({"chrono", "random"}));
    eval_cmd->add_option("--seed", eval_args.seed, "seed of the original random split");
    eval_cmd->add_option("--out", eval_args.out, "metrics JSON to write");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Grid-train over qubits x depth x seeds");
    sweep_cmd->add_option("--data", sweep_args.data, "capacity CSV file")->required();
    sweep_cmd->add_option("--qubits", sweep_args.qubits, "comma list, e.g. 1,2,3,4")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--depths", sweep_args.depths, "comma list, e.g. 1,2,3")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--seeds", sweep_args.seeds, "comma list, e.g. 1,2,3")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--train-frac", sweep_args.train_frac, "training fraction")
        ->check(CLI::Validator(check_fraction, "FRACTION"));
    sweep_cmd->add_option("--encoding", sweep_args.encoding, "arc|simple")
        ->check(CLI::IsMember({"arc", "simple"}));
    sweep_cmd->add_option("--split-mode", sweep_args.split_mode, "chrono|random")
        ->check(CLI::IsMember({"chrono", "random"}));
    sweep_cmd->add_option("--threads", sweep_args.threads, "concurrent runs")
        ->check(CLI::Range(1, 256));
    sweep_cmd->add_option("--max-iters", sweep_args.max_iters, "BFGS iteration cap per run")
        ->check(CLI::Range(1, 100000));
    sweep_cmd->add_option("--max-runs", sweep_args.max_runs, "grid size cap (default 64)")
        ->check(CLI::Range(1, 100000));
    sweep_cmd->add_option("--out", sweep_args.out, "sweep CSV to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (train_cmd->parsed()) return cmd_train(train_args);
        if (predict_cmd->parsed()) return cmd_predict(predict_args);
        if (eval_cmd->parsed()) return cmd_eval(eval_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
