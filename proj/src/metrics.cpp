#include "qfade/metrics.hpp"

#include <cmath>
#include <string>

namespace qfade {

namespace {

void require_comparable(std::span<const double> y, std::span<const double> y_hat) {
    if (y.size() != y_hat.size()) {
        throw LengthMismatch("metric inputs differ in length: " + std::to_string(y.size()) +
                             " vs " + std::to_string(y_hat.size()));
    }
    if (y.empty()) {
        throw EmptyInput("metric inputs are empty");
    }
}

}  // namespace

double rmse(std::span<const double> y, std::span<const double> y_hat) {
    require_comparable(y, y_hat);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = y[i] - y_hat[i];
        sum_sq += r * r;
    }
    return std::sqrt(sum_sq / static_cast<double>(y.size()));
}

double mape(std::span<const double> y, std::span<const double> y_hat) {
    require_comparable(y, y_hat);
    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0.0) {
            throw ZeroReference("reference value at index " + std::to_string(i) + " is zero");
        }
        sum += std::abs(y[i] - y_hat[i]) / y[i];
    }
    return sum / static_cast<double>(y.size()) * 100.0;
}

MetricPair evaluate(std::span<const double> y, std::span<const double> y_hat) {
    return {rmse(y, y_hat), mape(y, y_hat)};
}

}  // namespace qfade
