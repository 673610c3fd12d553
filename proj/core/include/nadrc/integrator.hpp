#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nadrc/state.hpp"

namespace nadrc {

enum class IntegrationMethod { FixedRk4, AdaptiveRk45 };

struct IntegratorConfig {
    IntegrationMethod method = IntegrationMethod::FixedRk4;
    double step = 1e-3;  // fixed step size, or the initial step when adaptive
    double abs_tol = 1e-8;
    double rel_tol = 1e-8;
    double max_step = 0.1;

    void validate() const;
};

// Vector field callback: writes dx/dt at (t, x) into dx (same dimension as x).
using Deriv = std::function<void(double t, const std::vector<double>& x,
                                 std::vector<double>& dx)>;

// Per-grid-point recorder, invoked once per output sample in time order.
// Lets callers log derived channels (control value, disturbance, ...) in
// lockstep with the state without re-integrating.
using Recorder = std::function<void(double t, const std::vector<double>& x)>;

// One classical 4th-order Runge-Kutta step from x.t to x.t + h.
StateVector rk4_step(const Deriv& deriv, double t, const StateVector& x, double h);

// Fixed-step RK4 over [t0, tf]; the trace grid is the step grid (a final
// partial step covers any remainder). Deterministic: identical inputs give
// bit-identical traces.
SimulationTrace integrate_fixed(const Deriv& deriv, const std::vector<double>& x0,
                                double t0, double tf, double h,
                                const std::vector<std::string>& state_names,
                                const Recorder& hook = {});

// Adaptive Dormand-Prince 5(4) over [t0, tf], resampled onto a uniform output
// grid via the pair's dense-output interpolant. Throws IntegrationFault on
// step underflow below 1e-12 s (stiffness) or non-finite values.
SimulationTrace integrate_adaptive(const Deriv& deriv, const std::vector<double>& x0,
                                   double t0, double tf, const IntegratorConfig& cfg,
                                   double output_grid_step,
                                   const std::vector<std::string>& state_names,
                                   const Recorder& hook = {});

}  // namespace nadrc
