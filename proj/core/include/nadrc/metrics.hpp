#pragma once

#include <vector>

namespace nadrc {

// Trapezoidal integral of t*|e(t)| over [max(t_start, grid front), grid back].
// A t_start inside an interval clips that interval by linear interpolation.
double itae(const std::vector<double>& grid, const std::vector<double>& error,
            double t_start = 0.0);

// Trapezoidal integral of u(t)^2 over the same window convention.
double isu(const std::vector<double>& grid, const std::vector<double>& control,
           double t_start = 0.0);

}  // namespace nadrc
