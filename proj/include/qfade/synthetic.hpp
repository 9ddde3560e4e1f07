#pragma once

#include <cstdint>
#include <string>

#include "qfade/dataset.hpp"

namespace qfade {

/// Exponential capacity-fade generator. Capacity at cycle c is
///
///     rated_ah * (floor_frac + fade_frac * exp(-c / tau_cycles)) + noise
///
/// with seeded Gaussian noise of standard deviation noise_sigma_ah. The
/// defaults mimic a 2-Ah 18650 cell fading toward its 70% state-of-health
/// retirement floor. Useful for tests, benchmarks, and sample data.
struct SyntheticSpec {
    std::string battery_id = "SYN01";
    int n_cycles = 168;
    double rated_ah = 2.0;
    double floor_frac = 0.70;
    double fade_frac = 0.30;
    double tau_cycles = 80.0;
    double noise_sigma_ah = 0.01;
    std::uint64_t seed = 1;
};

CapacitySeries synthetic_fade_series(const SyntheticSpec& spec);

}  // namespace qfade
