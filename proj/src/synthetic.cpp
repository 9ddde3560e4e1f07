#include "qfade/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qfade {

namespace {

/// Standard-normal draws via Box-Muller on raw mt19937_64 bits, so a seed
/// means the same series everywhere.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double uniform_open() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        return u;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

CapacitySeries synthetic_fade_series(const SyntheticSpec& spec) {
    if (spec.n_cycles < 1) {
        throw std::invalid_argument("synthetic series needs at least one cycle");
    }
    if (spec.rated_ah <= 0.0) {
        throw NonPositiveRated("synthetic rated capacity must be positive");
    }

    GaussianSource noise(spec.seed);
    CapacitySeries series;
    series.battery_id = spec.battery_id;
    series.rated_capacity_ah = spec.rated_ah;
    series.records.reserve(spec.n_cycles);
    for (int c = 1; c <= spec.n_cycles; ++c) {
        const double clean =
            spec.rated_ah * (spec.floor_frac + spec.fade_frac * std::exp(-c / spec.tau_cycles));
        double capacity = clean + spec.noise_sigma_ah * noise.next();
        if (capacity <= 0.0) capacity = 1e-6;  // keep records valid under extreme noise settings
        series.records.push_back({c, capacity});
    }
    return series;
}

}  // namespace qfade
