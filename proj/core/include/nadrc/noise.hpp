#pragma once

#include <cstdint>
#include <vector>

namespace nadrc {

// SplitMix64 finalizer: the 64-bit avalanche mix underlying the counter-based
// generator. Pure function of its input.
std::uint64_t splitmix64(std::uint64_t x);

// One standard-normal draw, a pure function of (seed, counter): two SplitMix64
// streams feed a Box-Muller transform. u1 is mapped into (0, 1] so log(u1) is
// always finite.
double gaussian_sample(std::uint64_t seed, std::uint64_t counter);

// One N(0, variance) sample per grid point; same (seed, variance, n) gives an
// identical sequence on every platform. variance = 0 yields exact zeros.
std::vector<double> gaussian_noise(std::uint64_t seed, double variance, std::size_t n);

struct NoiseConfig {
    bool enabled = false;
    double variance = 1e-4;
    std::uint64_t seed = 42;

    void validate() const;  // variance >= 0
};

// Zero-order-hold measurement noise: eta(t) is constant over each output-grid
// interval [k*step, (k+1)*step), so the held sample sequence is exactly the
// gaussian_noise sequence regardless of integrator substeps.
class NoiseSequence {
public:
    NoiseSequence() = default;
    NoiseSequence(const NoiseConfig& cfg, double grid_step);

    double operator()(double t) const;

private:
    bool enabled_ = false;
    double sigma_ = 0.0;
    double step_ = 1e-3;
    std::uint64_t seed_ = 0;
};

}  // namespace nadrc
