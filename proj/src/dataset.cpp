#include "qfade/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "qfade/util.hpp"

namespace qfade {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool parse_int(const std::string& text, int& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

MalformedCsv malformed(const std::filesystem::path& path, int line_no, const std::string& what) {
    return MalformedCsv(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

int split_point(std::size_t n_records, double train_fraction) {
    if (n_records < 5) {
        throw TooFewRecords("need at least 5 records to split, got " + std::to_string(n_records));
    }
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train fraction must lie in (0, 1), got " +
                                    double_repr(train_fraction));
    }
    const int k = static_cast<int>(std::ceil(train_fraction * static_cast<double>(n_records)));
    if (k < 1 || k >= static_cast<int>(n_records)) {
        throw DegenerateSplit("fraction " + double_repr(train_fraction) + " leaves an empty split of " +
                              std::to_string(n_records) + " records");
    }
    return k;
}

SplitResult make_split(const CapacitySeries& series, std::vector<CapacityRecord> train_records,
                       std::vector<CapacityRecord> test_records) {
    SplitResult out;
    out.train = {series.battery_id, series.rated_capacity_ah, std::move(train_records)};
    out.test = {series.battery_id, series.rated_capacity_ah, std::move(test_records)};
    return out;
}

}  // namespace

CapacitySeries load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }

    CapacitySeries series;
    bool have_id = false;
    bool have_rated = false;
    bool have_header = false;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;

        if (line.front() == '#') {
            std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;  // plain comment
            std::string key = body.substr(0, eq);
            std::string value = body.substr(eq + 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            if (key == "battery_id") {
                series.battery_id = value;
                have_id = true;
            } else if (key == "rated_ah") {
                if (!parse_double(value, series.rated_capacity_ah) || series.rated_capacity_ah <= 0.0) {
                    throw malformed(path, line_no, "rated_ah must be a positive number");
                }
                have_rated = true;
            }
            continue;
        }

        if (!have_header) {
            if (line != "cycle,capacity_ah") {
                throw malformed(path, line_no, "expected header 'cycle,capacity_ah', got '" + line + "'");
            }
            if (!have_id || !have_rated) {
                throw malformed(path, line_no,
                                "metadata lines '# battery_id=...' and '# rated_ah=...' must precede the header");
            }
            have_header = true;
            continue;
        }

        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw malformed(path, line_no, "expected two comma-separated fields");
        }
        CapacityRecord record;
        if (!parse_int(line.substr(0, comma), record.cycle) || record.cycle < 1) {
            throw malformed(path, line_no, "cycle must be a positive integer");
        }
        if (!parse_double(line.substr(comma + 1), record.capacity_ah)) {
            throw malformed(path, line_no, "capacity must be a number");
        }
        if (record.capacity_ah <= 0.0) {
            throw NonPositiveCapacity(path.string() + ":" + std::to_string(line_no) +
                                      ": capacity " + double_repr(record.capacity_ah) + " is not positive");
        }
        series.records.push_back(record);
    }

    if (!have_header) {
        throw malformed(path, line_no, "missing 'cycle,capacity_ah' header");
    }
    if (series.records.empty()) {
        throw malformed(path, line_no, "no capacity records");
    }

    std::stable_sort(series.records.begin(), series.records.end(),
                     [](const CapacityRecord& a, const CapacityRecord& b) { return a.cycle < b.cycle; });
    for (std::size_t i = 1; i < series.records.size(); ++i) {
        if (series.records[i].cycle == series.records[i - 1].cycle) {
            throw DuplicateCycle("duplicate cycle " + std::to_string(series.records[i].cycle) +
                                 " in " + path.string());
        }
    }
    return series;
}

void write_csv(const CapacitySeries& series, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "# battery_id=" << series.battery_id << "\n";
    out << "# rated_ah=" << double_repr(series.rated_capacity_ah) << "\n";
    out << "cycle,capacity_ah\n";
    for (const CapacityRecord& r : series.records) {
        out << r.cycle << "," << double_repr(r.capacity_ah) << "\n";
    }
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

SplitResult chronological_split(const CapacitySeries& series, double train_fraction) {
    const int k = split_point(series.records.size(), train_fraction);
    std::vector<CapacityRecord> train(series.records.begin(), series.records.begin() + k);
    std::vector<CapacityRecord> test(series.records.begin() + k, series.records.end());
    return make_split(series, std::move(train), std::move(test));
}

SplitResult random_split(const CapacitySeries& series, double train_fraction, std::uint64_t seed) {
    const int k = split_point(series.records.size(), train_fraction);
    std::vector<std::size_t> order(series.records.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    // Fisher-Yates with explicit 53-bit draws; std::shuffle's output is not
    // pinned down across standard libraries.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const std::size_t j = i + static_cast<std::size_t>(u * static_cast<double>(order.size() - i));
        std::swap(order[i], order[j]);
    }

    std::vector<CapacityRecord> train, test;
    train.reserve(k);
    test.reserve(order.size() - k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        (i < static_cast<std::size_t>(k) ? train : test).push_back(series.records[order[i]]);
    }
    auto by_cycle = [](const CapacityRecord& a, const CapacityRecord& b) { return a.cycle < b.cycle; };
    std::sort(train.begin(), train.end(), by_cycle);
    std::sort(test.begin(), test.end(), by_cycle);
    return make_split(series, std::move(train), std::move(test));
}

std::string to_string(SplitMode mode) {
    return mode == SplitMode::Chrono ? "chrono" : "random";
}

SplitMode split_mode_from_string(const std::string& name) {
    if (name == "chrono") return SplitMode::Chrono;
    if (name == "random") return SplitMode::Random;
    throw std::invalid_argument("unknown split mode '" + name + "' (expected chrono or random)");
}

SplitResult split_series(const CapacitySeries& series, double train_fraction, SplitMode mode,
                         std::uint64_t seed) {
    return mode == SplitMode::Chrono ? chronological_split(series, train_fraction)
                                     : random_split(series, train_fraction, seed);
}

FeatureBounds fit_bounds(const CapacitySeries& train) {
    if (train.records.empty()) {
        throw DegenerateBounds("cannot fit feature bounds on an empty series");
    }
    int lo = train.records.front().cycle;
    int hi = lo;
    for (const CapacityRecord& r : train.records) {
        lo = std::min(lo, r.cycle);
        hi = std::max(hi, r.cycle);
    }
    if (lo == hi) {
        throw DegenerateBounds("all records share cycle " + std::to_string(lo));
    }
    return {lo, hi};
}

double soh(const CapacityRecord& record, double rated_ah) {
    if (rated_ah <= 0.0) {
        throw NonPositiveRated("rated capacity " + double_repr(rated_ah) + " is not positive");
    }
    return record.capacity_ah / rated_ah;
}

std::optional<int> eol_cycle(const CapacitySeries& series, double threshold, double rated_ah) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("SoH threshold must lie in (0, 1), got " + double_repr(threshold));
    }
    for (const CapacityRecord& r : series.records) {
        if (soh(r, rated_ah) < threshold) return r.cycle;
    }
    return std::nullopt;
}

}  // namespace qfade
