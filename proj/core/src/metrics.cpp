#include "nadrc/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

namespace {

// Trapezoid over [max(t_start, grid front), grid back] of a pointwise
// integrand; a t_start inside an interval clips it by linear interpolation of
// the integrand.
template <typename F>
double trapezoid(const std::vector<double>& grid, const std::vector<double>& values,
                 double t_start, F integrand) {
    if (grid.size() != values.size())
        throw std::invalid_argument("metric channel length does not match grid");
    if (grid.size() < 2) return 0.0;

    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double t0 = grid[k], t1 = grid[k + 1];
        if (t1 <= t_start) continue;
        double f0 = integrand(t0, values[k]);
        const double f1 = integrand(t1, values[k + 1]);
        double a = t0;
        if (t0 < t_start) {
            const double w = (t_start - t0) / (t1 - t0);
            f0 = f0 + w * (f1 - f0);
            a = t_start;
        }
        acc += 0.5 * (f0 + f1) * (t1 - a);
    }
    return acc;
}

}  // namespace

double itae(const std::vector<double>& grid, const std::vector<double>& error,
            double t_start) {
    return trapezoid(grid, error, t_start,
                     [](double t, double e) { return t * std::abs(e); });
}

double isu(const std::vector<double>& grid, const std::vector<double>& control,
           double t_start) {
    return trapezoid(grid, control, t_start,
                     [](double, double u) { return u * u; });
}

}  // namespace nadrc
