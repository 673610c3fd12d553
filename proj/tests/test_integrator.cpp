#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nadrc/integrator.hpp"

using namespace nadrc;

namespace {

const Deriv kDecay = [](double, const std::vector<double>& x, std::vector<double>& dx) {
    dx[0] = -x[0];
};

const Deriv kZero = [](double, const std::vector<double>& x, std::vector<double>& dx) {
    for (std::size_t i = 0; i < x.size(); ++i) dx[i] = 0.0;
};

}  // namespace

TEST_CASE("rk4_step exact cases") {
    const StateVector x{0.0, {0.4, -0.2}};
    const StateVector same = rk4_step(kZero, 0.0, x, 0.1);
    CHECK(same.t == doctest::Approx(0.1));
    CHECK(same.values[0] == 0.4);
    CHECK(same.values[1] == -0.2);

    const Deriv one = [](double, const std::vector<double>&, std::vector<double>& dx) {
        dx[0] = 1.0;
    };
    const StateVector moved = rk4_step(one, 0.0, StateVector{0.0, {0.0}}, 0.1);
    CHECK(moved.values[0] == doctest::Approx(0.1).epsilon(1e-15));

    const StateVector decayed = rk4_step(kDecay, 0.0, StateVector{0.0, {1.0}}, 0.1);
    CHECK(decayed.values[0] == doctest::Approx(0.9048375).epsilon(1e-12));
}

TEST_CASE("integrate_fixed: constant trace under zero field") {
    const SimulationTrace tr = integrate_fixed(kZero, {1.0, 2.0}, 0.0, 1.0, 0.01, {"a", "b"});
    CHECK(tr.samples() == 101);
    for (std::size_t k = 0; k < tr.samples(); ++k) {
        CHECK(tr.columns[0][k] == 1.0);
        CHECK(tr.columns[1][k] == 2.0);
        if (k > 0) CHECK(tr.grid[k] > tr.grid[k - 1]);
    }
}

TEST_CASE("integrate_fixed matches the analytic exponential") {
    const SimulationTrace tr = integrate_fixed(kDecay, {1.0}, 0.0, 1.0, 1e-3, {"x"});
    CHECK(std::abs(tr.columns[0].back() - std::exp(-1.0)) < 1e-9);
}

TEST_CASE("integrate_fixed shows 4th-order convergence under step halving") {
    auto final_err = [](double h) {
        const SimulationTrace tr = integrate_fixed(kDecay, {1.0}, 0.0, 1.0, h, {"x"});
        return std::abs(tr.columns[0].back() - std::exp(-1.0));
    };
    const double ratio = final_err(0.01) / final_err(0.005);
    CHECK(ratio > 16.0 * 0.8);
    CHECK(ratio < 16.0 * 1.2);
}

TEST_CASE("integrate_fixed covers a non-divisible span with a final partial step") {
    const SimulationTrace tr = integrate_fixed(kZero, {1.0}, 0.0, 0.95, 0.1, {"x"});
    CHECK(tr.samples() == 11);
    CHECK(tr.grid.back() == 0.95);
    CHECK(tr.grid[9] == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("integrate_fixed is deterministic") {
    auto run = [] {
        return integrate_fixed(kDecay, {1.0, 0.5}, 0.0, 2.0, 1e-3, {"x", "y"},
                               [](double, const std::vector<double>&) {});
    };
    const SimulationTrace a = run();
    const SimulationTrace b = run();
    REQUIRE(a.grid == b.grid);
    CHECK(a.columns == b.columns);
}

TEST_CASE("integrate_fixed reports the offending channel on non-finite states") {
    const Deriv burst = [](double t, const std::vector<double>&, std::vector<double>& dx) {
        dx[0] = 0.0;
        dx[1] = t > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    };
    try {
        integrate_fixed(burst, {0.0, 0.0}, 0.0, 1.0, 0.1, {"a", "b"});
        FAIL("expected IntegrationFault");
    } catch (const IntegrationFault& f) {
        CHECK(f.channel() == 1);
        CHECK(f.t() >= 0.4);
        CHECK(f.t() <= 0.7);
    }
}

TEST_CASE("integrate_fixed invokes the recorder once per grid point, in order") {
    std::vector<double> seen;
    integrate_fixed(kDecay, {1.0}, 0.0, 0.5, 0.1, {"x"},
                    [&seen](double t, const std::vector<double>&) { seen.push_back(t); });
    REQUIRE(seen.size() == 6);
    for (std::size_t k = 1; k < seen.size(); ++k) CHECK(seen[k] > seen[k - 1]);
    CHECK(seen.front() == 0.0);
    CHECK(seen.back() == 0.5);
}

TEST_CASE("integrate_adaptive: zero field accepted in one giant step") {
    int evals = 0;
    const Deriv counted = [&evals](double, const std::vector<double>& x,
                                   std::vector<double>& dx) {
        ++evals;
        for (std::size_t i = 0; i < x.size(); ++i) dx[i] = 0.0;
    };
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::AdaptiveRk45;
    cfg.step = 1.0;
    cfg.max_step = 0.5;
    const SimulationTrace tr = integrate_adaptive(counted, {3.0}, 0.0, 0.3, cfg, 0.05, {"x"});
    CHECK(evals == 7);  // FSAL pair: one seed stage + six new stages, one accepted step
    CHECK(tr.samples() == 7);
    CHECK(tr.grid.back() == doctest::Approx(0.3).epsilon(1e-12));
    for (const double v : tr.columns[0]) CHECK(v == 3.0);
}

TEST_CASE("integrate_adaptive matches the analytic exponential") {
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::AdaptiveRk45;
    const SimulationTrace tr = integrate_adaptive(kDecay, {1.0}, 0.0, 1.0, cfg, 0.1, {"x"});
    REQUIRE(tr.grid.back() == doctest::Approx(1.0).epsilon(1e-12));
    // dense output keeps the interpolated grid values at solver accuracy too
    for (std::size_t k = 0; k < tr.samples(); ++k)
        CHECK(std::abs(tr.columns[0][k] - std::exp(-tr.grid[k])) < 1e-7);
}

TEST_CASE("integrate_adaptive is deterministic") {
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::AdaptiveRk45;
    const SimulationTrace a = integrate_adaptive(kDecay, {1.0}, 0.0, 3.0, cfg, 0.01, {"x"});
    const SimulationTrace b = integrate_adaptive(kDecay, {1.0}, 0.0, 3.0, cfg, 0.01, {"x"});
    REQUIRE(a.grid == b.grid);
    CHECK(a.columns == b.columns);
}

TEST_CASE("integrate_adaptive faults when the problem escapes in finite time") {
    // x' = x^2, x(0) = 1 blows up at t = 1; the step controller must underflow
    const Deriv blowup = [](double, const std::vector<double>& x, std::vector<double>& dx) {
        dx[0] = x[0] * x[0];
    };
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::AdaptiveRk45;
    try {
        integrate_adaptive(blowup, {1.0}, 0.0, 2.0, cfg, 0.01, {"x"});
        FAIL("expected IntegrationFault");
    } catch (const IntegrationFault& f) {
        CHECK(f.t() > 0.9);
        CHECK(f.t() <= 1.05);
    }
}

TEST_CASE("integrate_adaptive faults instead of grinding on a sliding relay") {
    // x' = -10 sign(x) reaches the switching surface at t = 0.1 and slides;
    // error control then pins h near the tolerance scale, which must exhaust
    // the step budget rather than loop without visible progress
    const Deriv relay = [](double, const std::vector<double>& x, std::vector<double>& dx) {
        dx[0] = x[0] > 0.0 ? -10.0 : x[0] < 0.0 ? 10.0 : 0.0;
    };
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::AdaptiveRk45;
    try {
        integrate_adaptive(relay, {1.0}, 0.0, 1.0, cfg, 0.01, {"x"});
        FAIL("expected IntegrationFault");
    } catch (const IntegrationFault& f) {
        CHECK(f.t() >= 0.1);  // the smooth approach phase must not burn the budget
        CHECK(f.t() < 0.6);   // nor may the slide crawl anywhere near completion
        CHECK(std::string(f.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("integrator config invariants") {
    IntegratorConfig cfg;
    cfg.step = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = IntegratorConfig{};
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = IntegratorConfig{};
    cfg.max_step = -0.1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS(integrate_fixed(kZero, {1.0}, 0.0, 1.0, -0.1, {"x"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_fixed(kZero, {1.0}, 1.0, 0.0, 0.1, {"x"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_fixed(kZero, {1.0}, 0.0, 1.0, 0.1, {"x", "y"}),
                    std::invalid_argument);
}
