#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qfade/encoding.hpp"
#include "qfade/errors.hpp"

namespace qfade {

/// One capacity measurement: remaining capacity in Ah after `cycle`
/// charge/discharge cycles.
struct CapacityRecord {
    int cycle = 1;
    double capacity_ah = 0.0;
};

/// Cycle-ordered capacity history of a single cell.
struct CapacitySeries {
    std::string battery_id;
    double rated_capacity_ah = 0.0;
    std::vector<CapacityRecord> records;
};

/// Reads the flat CSV layout this project uses for cell histories:
///
///     # battery_id=B05
///     # rated_ah=2.0
///     cycle,capacity_ah
///     1,1.856
///     ...
///
/// UTF-8, LF or CRLF, `#` metadata lines before the header, decimal
/// point, no thousands separators. Records are sorted by cycle on load;
/// duplicate cycles and non-positive capacities are rejected.
CapacitySeries load_csv(const std::filesystem::path& path);

/// Inverse of load_csv; numbers are written in shortest round-trip form
/// so load_csv(write_csv(s)) == s exactly.
void write_csv(const CapacitySeries& series, const std::filesystem::path& path);

struct SplitResult {
    CapacitySeries train;
    CapacitySeries test;
};

/// Train on the earliest ceil(fraction*N) records, test on the rest.
/// Degradation forecasting trains on the past; a random split would leak
/// future cycles into training.
SplitResult chronological_split(const CapacitySeries& series, double train_fraction);

/// Seeded random partition of the same sizes; both sides are re-sorted by
/// cycle. Provided for split-mode comparisons.
SplitResult random_split(const CapacitySeries& series, double train_fraction, std::uint64_t seed);

enum class SplitMode { Chrono, Random };

std::string to_string(SplitMode mode);
SplitMode split_mode_from_string(const std::string& name);

SplitResult split_series(const CapacitySeries& series, double train_fraction, SplitMode mode,
                         std::uint64_t seed);

/// (min cycle, max cycle) of the given split; feature normalization must
/// be fit on training data only.
FeatureBounds fit_bounds(const CapacitySeries& train);

/// State of health: capacity / rated capacity.
double soh(const CapacityRecord& record, double rated_ah);

/// First cycle whose SoH falls below `threshold`, or nullopt if the
/// series never crosses it.
std::optional<int> eol_cycle(const CapacitySeries& series, double threshold, double rated_ah);

}  // namespace qfade
