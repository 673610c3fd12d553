#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nadrc/metrics.hpp"

using namespace nadrc;

namespace {

std::vector<double> uniform_grid(double a, double b, std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t k = 0; k < points; ++k)
        g[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1);
    return g;
}

std::vector<double> sampled(const std::vector<double>& grid, double (*f)(double)) {
    std::vector<double> v(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) v[k] = f(grid[k]);
    return v;
}

}  // namespace

TEST_CASE("itae closed-form oracles") {
    const std::vector<double> g = uniform_grid(0.0, 1.0, 1001);
    CHECK(itae(g, std::vector<double>(g.size(), 0.0)) == 0.0);
    CHECK(itae(g, g) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));

    const std::vector<double> g2 = uniform_grid(0.0, 2.0, 2001);
    CHECK(itae(g2, std::vector<double>(g2.size(), 1.0)) == doctest::Approx(2.0).epsilon(1e-6));
    // sign-insensitive: |e|
    CHECK(itae(g2, std::vector<double>(g2.size(), -1.0)) ==
          doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("isu closed-form oracles") {
    const std::vector<double> g = uniform_grid(0.0, 3.0, 301);
    CHECK(isu(g, std::vector<double>(g.size(), 0.0)) == 0.0);
    CHECK(isu(g, std::vector<double>(g.size(), 1.0)) == doctest::Approx(3.0).epsilon(1e-9));

    const std::vector<double> gp = uniform_grid(0.0, 2.0 * std::numbers::pi, 2001);
    CHECK(isu(gp, sampled(gp, std::sin)) == doctest::Approx(std::numbers::pi).epsilon(1e-6));
}

TEST_CASE("metrics are additive across contiguous windows") {
    const std::vector<double> g = uniform_grid(0.0, 2.0, 401);
    const std::vector<double> e = sampled(g, std::cos);
    const std::size_t mid = 137;  // split exactly on a grid point
    const std::vector<double> g_lo(g.begin(), g.begin() + mid + 1);
    const std::vector<double> e_lo(e.begin(), e.begin() + mid + 1);

    const double whole = itae(g, e);
    const double parts = itae(g_lo, e_lo) + itae(g, e, g[mid]);
    CHECK(whole == doctest::Approx(parts).epsilon(1e-12));

    const double whole_u = isu(g, e);
    const double parts_u = isu(g_lo, e_lo) + isu(g, e, g[mid]);
    CHECK(whole_u == doctest::Approx(parts_u).epsilon(1e-12));
}

TEST_CASE("window start inside an interval clips by interpolation") {
    // integrand t*|e| with e = 1 is linear, so the trapezoid value is exact
    const std::vector<double> g = {0.0, 0.5, 1.0, 1.5, 2.0};
    const std::vector<double> e(5, 1.0);
    CHECK(itae(g, e, 0.25) == doctest::Approx((4.0 - 0.0625) / 2.0).epsilon(1e-12));
    // start beyond the grid: empty window
    CHECK(itae(g, e, 5.0) == 0.0);
}

TEST_CASE("trapezoid error shrinks 4x per grid refinement on smooth integrands") {
    const double itae_exact = std::sin(2.0) - 2.0 * std::cos(2.0);  // t*sin t on [0,2]
    const double isu_exact = 1.0 - std::sin(4.0) / 4.0;             // sin^2 on [0,2]
    auto err_pair = [&](std::size_t points) {
        const std::vector<double> g = uniform_grid(0.0, 2.0, points);
        const std::vector<double> s = sampled(g, std::sin);
        return std::pair{std::abs(itae(g, s) - itae_exact), std::abs(isu(g, s) - isu_exact)};
    };
    const auto coarse = err_pair(101);
    const auto fine = err_pair(201);
    CHECK(coarse.first / fine.first == doctest::Approx(4.0).epsilon(0.2));
    CHECK(coarse.second / fine.second == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("metrics reject mismatched channel lengths and degenerate grids") {
    const std::vector<double> g = {0.0, 1.0};
    CHECK_THROWS_AS(itae(g, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(isu(g, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK(itae({0.5}, {1.0}) == 0.0);
    CHECK(itae({}, {}) == 0.0);
}
