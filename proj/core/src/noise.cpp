#include "nadrc/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double gaussian_sample(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t stream = splitmix64(seed);
    const std::uint64_t w1 = splitmix64(stream ^ splitmix64(2 * counter));
    const std::uint64_t w2 = splitmix64(stream ^ splitmix64(2 * counter + 1));
    // 53-bit mantissas; u1 in (0, 1] keeps log(u1) finite
    const double u1 = static_cast<double>((w1 >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(w2 >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> gaussian_noise(std::uint64_t seed, double variance, std::size_t n) {
    if (!(variance >= 0.0))
        throw std::invalid_argument("noise variance must be >= 0");
    std::vector<double> out(n);
    const double sigma = std::sqrt(variance);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = sigma * gaussian_sample(seed, k);
    return out;
}

void NoiseConfig::validate() const {
    if (!(variance >= 0.0))
        throw std::invalid_argument("noise variance must be >= 0");
}

NoiseSequence::NoiseSequence(const NoiseConfig& cfg, double grid_step)
    : enabled_(cfg.enabled), sigma_(std::sqrt(cfg.variance)), step_(grid_step), seed_(cfg.seed) {
    cfg.validate();
    if (!(grid_step > 0.0))
        throw std::invalid_argument("noise hold step must be > 0");
}

double NoiseSequence::operator()(double t) const {
    if (!enabled_ || sigma_ == 0.0) return 0.0;
    // epsilon guard so grid points land in their own interval despite rounding
    const auto k = static_cast<std::uint64_t>(std::floor(t / step_ + 1e-9));
    return sigma_ * gaussian_sample(seed_, k);
}

}  // namespace nadrc
