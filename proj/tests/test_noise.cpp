#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nadrc/noise.hpp"

using namespace nadrc;

TEST_CASE("splitmix64 avalanches and is pure") {
    CHECK(splitmix64(42) == splitmix64(42));
    CHECK(splitmix64(42) != splitmix64(43));
    CHECK(splitmix64(0) != 0);  // the finalizer must not fix the zero state
}

TEST_CASE("gaussian_sample is a pure function of seed and counter") {
    CHECK(gaussian_sample(42, 0) == gaussian_sample(42, 0));
    CHECK(gaussian_sample(42, 1) != gaussian_sample(42, 0));
    CHECK(gaussian_sample(43, 0) != gaussian_sample(42, 0));
    for (std::uint64_t k = 0; k < 1000; ++k) CHECK(std::isfinite(gaussian_sample(1, k)));
}

TEST_CASE("gaussian_noise determinism and zero variance") {
    const std::vector<double> a = gaussian_noise(42, 1e-4, 500);
    const std::vector<double> b = gaussian_noise(42, 1e-4, 500);
    CHECK(a == b);
    CHECK(a != gaussian_noise(43, 1e-4, 500));

    for (const double v : gaussian_noise(42, 0.0, 100)) CHECK(v == 0.0);
}

TEST_CASE("gaussian_noise sample statistics at the committed seed") {
    const std::size_t n = 100000;
    const double variance = 1e-4;
    const double sigma = std::sqrt(variance);
    const std::vector<double> v = gaussian_noise(42, variance, n);

    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(n);
    // 3-sigma gate on the sample mean of n iid draws
    CHECK(std::abs(mean) <= 3.0 * sigma / std::sqrt(static_cast<double>(n)));

    double var = 0.0;
    for (const double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n);
    CHECK(var == doctest::Approx(variance).epsilon(0.05));
}

TEST_CASE("noise config invariants") {
    NoiseConfig cfg;
    cfg.variance = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("held noise is constant over each grid interval") {
    NoiseConfig cfg;
    cfg.enabled = true;
    cfg.variance = 1e-4;
    cfg.seed = 42;
    const double step = 1e-3;
    const NoiseSequence eta(cfg, step);
    const std::vector<double> samples = gaussian_noise(cfg.seed, cfg.variance, 50);

    for (std::size_t k = 0; k < 50; ++k) {
        const double t0 = static_cast<double>(k) * step;
        CHECK(eta(t0) == samples[k]);
        CHECK(eta(t0 + 0.3 * step) == samples[k]);
        CHECK(eta(t0 + 0.999 * step) == samples[k]);
    }
}

TEST_CASE("disabled noise reads as exact zero") {
    const NoiseSequence eta(NoiseConfig{}, 1e-3);
    CHECK(eta(0.0) == 0.0);
    CHECK(eta(1.2345) == 0.0);
}
