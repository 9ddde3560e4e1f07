#include "qfade/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

namespace qfade {

namespace {

using nlohmann::json;

void require_keys(const json& object, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.contains(key)) {
            throw MalformedModelFile("unknown field '" + key + "' in " + where);
        }
    }
    for (const std::string& key : allowed) {
        if (!object.contains(key)) {
            throw MalformedModelFile("missing field '" + key + "' in " + where);
        }
    }
}

}  // namespace

void validate_model(const QnnModel& model) {
    if (model.encoding.n_qubits != model.ansatz.n_qubits) {
        throw QubitCountMismatch("encoding is " + std::to_string(model.encoding.n_qubits) +
                                 "-qubit but ansatz is " + std::to_string(model.ansatz.n_qubits) +
                                 "-qubit");
    }
    if (model.ansatz.n_qubits < 1 || model.ansatz.n_qubits > kMaxQubits) {
        throw QubitCountOutOfRange("model width " + std::to_string(model.ansatz.n_qubits) +
                                   " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (model.ansatz.depth < 1) {
        throw std::invalid_argument("ansatz depth must be >= 1");
    }
    if (static_cast<int>(model.theta.size()) != param_count(model.ansatz)) {
        throw ParamLengthMismatch("model carries " + std::to_string(model.theta.size()) +
                                  " parameters, ansatz needs " +
                                  std::to_string(param_count(model.ansatz)));
    }
    if (model.readout_qubit < 0 || model.readout_qubit >= model.ansatz.n_qubits) {
        throw QubitIndexOutOfRange("readout qubit " + std::to_string(model.readout_qubit) +
                                   " out of range");
    }
    if (model.feature_bounds.min_cycle >= model.feature_bounds.max_cycle) {
        throw DegenerateBounds("model feature bounds are degenerate");
    }
}

double raw_expectation(const QnnModel& model, double x_norm) {
    StateVector state(model.encoding.n_qubits);
    state.apply(encoding_circuit(x_norm, model.encoding));
    state.apply(ansatz_circuit(model.ansatz, model.theta));
    return expectation_z(state, model.readout_qubit);
}

double predict_one(const QnnModel& model, int cycle) {
    const double x = normalize_cycle(cycle, model.feature_bounds);
    return model.out_scale * raw_expectation(model, x) + model.out_bias;
}

std::vector<double> predict_batch(const QnnModel& model, const std::vector<int>& cycles) {
    std::vector<double> out;
    out.reserve(cycles.size());
    for (int cycle : cycles) out.push_back(predict_one(model, cycle));
    return out;
}

QnnModel make_initial_model(const EncodingSpec& encoding, const AnsatzSpec& ansatz,
                            const CapacitySeries& train_data, std::uint64_t seed) {
    if (train_data.records.empty()) {
        throw EmptyDataset("cannot initialize a model from an empty training split");
    }
    double lo = train_data.records.front().capacity_ah;
    double hi = lo;
    double sum = 0.0;
    for (const CapacityRecord& r : train_data.records) {
        lo = std::min(lo, r.capacity_ah);
        hi = std::max(hi, r.capacity_ah);
        sum += r.capacity_ah;
    }

    QnnModel model;
    model.encoding = encoding;
    model.ansatz = ansatz;
    model.theta = init_params(ansatz, seed);
    model.readout_qubit = encoding.n_qubits >= 2 ? 1 : 0;
    model.out_scale = (hi - lo) / 2.0;
    model.out_bias = sum / static_cast<double>(train_data.records.size());
    model.feature_bounds = fit_bounds(train_data);
    validate_model(model);
    return model;
}

void save_model(const QnnModel& model, const std::filesystem::path& path) {
    validate_model(model);
    json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["encoding"] = {{"n_qubits", model.encoding.n_qubits}, {"mode", to_string(model.encoding.mode)}};
    doc["ansatz"] = {{"n_qubits", model.ansatz.n_qubits}, {"depth", model.ansatz.depth}};
    doc["theta"] = model.theta;
    doc["readout_qubit"] = model.readout_qubit;
    doc["out_scale"] = model.out_scale;
    doc["out_bias"] = model.out_bias;
    doc["feature_bounds"] = {{"min_cycle", model.feature_bounds.min_cycle},
                             {"max_cycle", model.feature_bounds.max_cycle}};

    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

QnnModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }

    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw MalformedModelFile(path.string() + ": " + e.what());
    }

    try {
        if (!doc.is_object() || !doc.contains("schema_version") ||
            !doc["schema_version"].is_number_integer()) {
            throw MalformedModelFile(path.string() + ": missing integer schema_version");
        }
        const int version = doc["schema_version"].get<int>();
        if (version != kModelSchemaVersion) {
            throw SchemaVersionUnsupported("model schema_version " + std::to_string(version) +
                                           " unsupported (expected " +
                                           std::to_string(kModelSchemaVersion) + ")");
        }

        require_keys(doc,
                     {"schema_version", "encoding", "ansatz", "theta", "readout_qubit", "out_scale",
                      "out_bias", "feature_bounds"},
                     "model document");
        require_keys(doc["encoding"], {"n_qubits", "mode"}, "encoding");
        require_keys(doc["ansatz"], {"n_qubits", "depth"}, "ansatz");
        require_keys(doc["feature_bounds"], {"min_cycle", "max_cycle"}, "feature_bounds");

        QnnModel model;
        model.encoding.n_qubits = doc["encoding"]["n_qubits"].get<int>();
        model.encoding.mode = encoding_mode_from_string(doc["encoding"]["mode"].get<std::string>());
        model.ansatz.n_qubits = doc["ansatz"]["n_qubits"].get<int>();
        model.ansatz.depth = doc["ansatz"]["depth"].get<int>();
        model.theta = doc["theta"].get<ParameterVector>();
        model.readout_qubit = doc["readout_qubit"].get<int>();
        model.out_scale = doc["out_scale"].get<double>();
        model.out_bias = doc["out_bias"].get<double>();
        model.feature_bounds.min_cycle = doc["feature_bounds"]["min_cycle"].get<int>();
        model.feature_bounds.max_cycle = doc["feature_bounds"]["max_cycle"].get<int>();
        validate_model(model);
        return model;
    } catch (const SchemaVersionUnsupported&) {
        throw;
    } catch (const MalformedModelFile&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedModelFile(path.string() + ": " + e.what());
    }
}

}  // namespace qfade
