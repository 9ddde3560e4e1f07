#include <random>
#include <vector>

#include <doctest.h>

#include "qfade/metrics.hpp"
#include "support/generators.hpp"

using namespace qfade;

TEST_CASE("rmse hand cases") {
    const std::vector<double> y{2.0, 2.0};
    CHECK(rmse(y, y) == 0.0);
    CHECK(rmse(y, std::vector<double>{1.0, 3.0}) == 1.0);
    CHECK(rmse(std::vector<double>{2.0}, std::vector<double>{2.5}) == 0.5);
}

TEST_CASE("mape hand cases") {
    const std::vector<double> y{2.0, 2.0};
    CHECK(mape(y, y) == 0.0);
    CHECK(mape(y, std::vector<double>{1.9, 2.1}) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("input guards") {
    const std::vector<double> y{1.0, 2.0};
    CHECK_THROWS_AS(rmse(y, std::vector<double>{1.0}), LengthMismatch);
    CHECK_THROWS_AS(mape(y, std::vector<double>{1.0, 2.0, 3.0}), LengthMismatch);
    CHECK_THROWS_AS(rmse(std::vector<double>{}, std::vector<double>{}), EmptyInput);
    CHECK_THROWS_AS(mape(std::vector<double>{0.0, 1.0}, y), ZeroReference);
}

TEST_CASE("rmse is symmetric, mape is not") {
    const std::vector<double> y{2.0, 4.0};
    const std::vector<double> y_hat{1.0, 5.0};
    CHECK(rmse(y, y_hat) == rmse(y_hat, y));
    CHECK(mape(y, y_hat) != mape(y_hat, y));
}

TEST_CASE("scaling: rmse is equivariant, mape is invariant") {
    const std::vector<double> y{1.5, 2.0, 1.75};
    const std::vector<double> y_hat{1.4, 2.2, 1.9};

    // power-of-two scaling is exact in binary floating point
    std::vector<double> y2, y_hat2;
    for (double v : y) y2.push_back(2.0 * v);
    for (double v : y_hat) y_hat2.push_back(2.0 * v);
    CHECK(rmse(y2, y_hat2) == 2.0 * rmse(y, y_hat));
    CHECK(mape(y2, y_hat2) == mape(y, y_hat));

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const double c = 0.1 + 3.0 * qfade_test::uniform01(rng);
        std::vector<double> yc, y_hatc;
        for (double v : y) yc.push_back(c * v);
        for (double v : y_hat) y_hatc.push_back(c * v);
        CHECK(rmse(yc, y_hatc) == doctest::Approx(c * rmse(y, y_hat)).epsilon(1e-12));
        CHECK(mape(yc, y_hatc) == doctest::Approx(mape(y, y_hat)).epsilon(1e-12));
    }
}

TEST_CASE("both metrics vanish only on a perfect fit") {
    const std::vector<double> y{1.9, 1.8, 1.7};
    const MetricPair perfect = evaluate(y, y);
    CHECK(perfect.rmse == 0.0);
    CHECK(perfect.mape == 0.0);

    std::vector<double> off = y;
    off[1] += 1e-9;
    const MetricPair nearly = evaluate(y, off);
    CHECK(nearly.rmse > 0.0);
    CHECK(nearly.mape > 0.0);
}
