#pragma once

#include <vector>

#include "nadrc/runner.hpp"

namespace nadrc {

struct BoundCell {
    double omega0 = 0.0;
    int i = 0;                  // state index 1..n+1
    double theoretical = 0.0;   // convergence bound from the solved P and data-estimated M
    double empirical = 0.0;     // steady-state max |e_i| (final 20% of horizon)
    double ratio = 0.0;         // empirical / theoretical

    bool within() const { return empirical <= theoretical; }
};

struct BoundReport {
    std::vector<BoundCell> cells;       // sweep-major, state-index-minor
    std::vector<double> omega0_sweep;
    std::vector<double> m_estimates;    // data-estimated M per omega0
    std::vector<double> slope;          // fitted log-log slope of empirical vs omega0, per i

    bool all_within() const;
};

// Conventional-variant sweep over omega0: per value, run the benchmark plant
// noise-free, estimate M = max |finite difference of L| over the estimation
// window, evaluate the convergence bound for every state index, and measure
// the steady-state empirical error. Also fits the per-index log-log slope of
// empirical error vs omega0. Requires a noise-free base scenario.
BoundReport verify_theorem1(const Scenario& base, const std::vector<double>& omega0_sweep,
                            double m_window_start = 0.0);

struct Lemma2Report {
    std::size_t total = 0;      // steady-state samples checked
    std::size_t satisfied = 0;  // samples where |de3| <= |dL| + beta3*|e1| + slack
    double slack = 0.0;         // 10 * h * max|second difference of e3| over the window

    double fraction() const { return total ? double(satisfied) / double(total) : 1.0; }
};

// Per-sample check of the disturbance-error derivative inequality
// |e3'| <= |L'| + |beta_{n+1} * e1| on the final 20% of the trace, both
// derivatives taken by finite differences at the trace resolution. The slack
// term covers the first-order finite-difference truncation error.
Lemma2Report lemma2_check(const SimulationTrace& trace, double beta_np1);

}  // namespace nadrc
