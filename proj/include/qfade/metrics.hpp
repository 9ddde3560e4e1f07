#pragma once

#include <span>

#include "qfade/errors.hpp"

namespace qfade {

struct MetricPair {
    double rmse = 0.0;  // Ah
    double mape = 0.0;  // percent
};

/// sqrt(mean((y - y_hat)^2))
double rmse(std::span<const double> y, std::span<const double> y_hat);

/// mean(|y - y_hat| / y) * 100. References must be non-zero; capacities
/// are strictly positive so no absolute value is taken in the denominator.
double mape(std::span<const double> y, std::span<const double> y_hat);

MetricPair evaluate(std::span<const double> y, std::span<const double> y_hat);

}  // namespace qfade
