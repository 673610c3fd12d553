#pragma once

#include <vector>

#include "nadrc/state.hpp"

namespace nadrc {

// Linear extended state observer of order n+1 for an n-integrator plant.
// coeffs are the characteristic-polynomial coefficients a_1..a_{n+1}; empty
// selects the binomial set C(n+1, i), placing every observer pole at -omega0.
struct LesoConfig {
    int n = 2;
    double omega0 = 10.0;
    std::vector<double> coeffs;

    // beta_i = a_i * omega0^i
    std::vector<double> gains() const;

    void validate() const;
};

// Binomial gain set: beta_i = C(n+1, i) * omega0^i, the coefficients of
// (s + omega0)^{n+1} minus the leading 1.
std::vector<double> bandwidth_gains(int n, double omega0);

// xhat' per the LESO law: dxhat_i = xhat_{i+1} + beta_i*(y - xhat_1) for i < n,
// dxhat_n = xhat_{n+1} + u + beta_n*(y - xhat_1), dxhat_{n+1} = beta_{n+1}*(y - xhat_1).
void leso_deriv(const double* xhat, double y, double u,
                const std::vector<double>& gains, int n, double* dxhat);

// The outer observer of the nested pair: structurally identical, driven by the
// intermediate control v instead of u.
void outer_leso_deriv(const double* zhat, double y, double v,
                      const std::vector<double>& gains, int n, double* dzhat);

// Per-sample estimation errors derived from a finished trace:
//   e_i    = x_i - xhat_i, with the ground-truth channel L standing in for x_3;
//   zeta_i = x_i - zhat_i, with the inner residual e_3 standing in for the
//            outer system's extended state (only when zhat channels exist).
// Appends channels e1..e3 (and zeta1..zeta3) to the trace.
void estimation_errors(SimulationTrace& trace);

}  // namespace nadrc
