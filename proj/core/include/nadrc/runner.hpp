#pragma once

#include <array>

#include "nadrc/scenario.hpp"

namespace nadrc {

struct Metrics {
    double itae = 0.0;       // of the tracking error r1 - x1
    double isu = 0.0;        // of the plant input u
    double itae_e3 = 0.0;    // of the inner disturbance-estimation error
    double itae_zeta3 = 0.0; // of the nested residual error (nested runs only)
};

struct RunResult {
    Scenario scenario;
    SimulationTrace trace;
    Metrics metrics;
};

// Integrate the augmented ODE (plant + TD + inner LESO [+ outer LESO]) under
// the scenario's variant and noise settings; record every channel; compute
// metrics on the output grid. Deterministic given the scenario (incl. seed).
RunResult run_scenario(const Scenario& s);

// One Table-style comparison: rows `a` and `b`, columns ITAE/ISU under both
// noise conditions, plus reductions 100*(a - b)/a.
struct CompareResult {
    // indexed [variant a=0, b=1][clean=0, noisy=1]
    std::array<std::array<RunResult, 2>, 2> runs;
    std::array<std::array<double, 2>, 2> itae;
    std::array<std::array<double, 2>, 2> isu;

    double itae_reduction(int noisy) const;
    double isu_reduction(int noisy) const;
};

// Four runs (2 variants x 2 noise conditions) sharing the base tuning and
// noise seed. Default comparison is conventional (a) vs nested (b); the
// two-variant overload supports self-comparison.
CompareResult compare_variants(const Scenario& base);
CompareResult compare_variants(const Scenario& base, AdrcVariant a, AdrcVariant b);

}  // namespace nadrc
