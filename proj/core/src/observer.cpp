#include "nadrc/observer.hpp"

#include <cmath>
#include <stdexcept>

namespace nadrc {

std::vector<double> bandwidth_gains(int n, double omega0) {
    if (n < 1)
        throw std::invalid_argument("observer plant order must be >= 1");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("observer bandwidth omega0 must be > 0");
    // binom(n+1, i) built incrementally; beta_i = binom * omega0^i
    std::vector<double> beta(static_cast<std::size_t>(n) + 1);
    double binom = 1.0;
    double pow_w = 1.0;
    for (int i = 1; i <= n + 1; ++i) {
        binom = binom * (n + 2 - i) / i;
        pow_w *= omega0;
        beta[i - 1] = binom * pow_w;
    }
    return beta;
}

void LesoConfig::validate() const {
    if (n < 1)
        throw std::invalid_argument("observer plant order must be >= 1");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("observer bandwidth omega0 must be > 0");
    if (!coeffs.empty() && coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("observer coefficient vector must have n+1 entries");
}

std::vector<double> LesoConfig::gains() const {
    validate();
    if (coeffs.empty())
        return bandwidth_gains(n, omega0);
    std::vector<double> beta(coeffs.size());
    double pow_w = 1.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        pow_w *= omega0;
        beta[i] = coeffs[i] * pow_w;
    }
    return beta;
}

void leso_deriv(const double* xhat, double y, double u,
                const std::vector<double>& gains, int n, double* dxhat) {
    const double innovation = y - xhat[0];
    for (int i = 0; i < n - 1; ++i)
        dxhat[i] = xhat[i + 1] + gains[i] * innovation;
    dxhat[n - 1] = xhat[n] + u + gains[n - 1] * innovation;
    dxhat[n] = gains[n] * innovation;
}

void outer_leso_deriv(const double* zhat, double y, double v,
                      const std::vector<double>& gains, int n, double* dzhat) {
    leso_deriv(zhat, y, v, gains, n, dzhat);
}

void estimation_errors(SimulationTrace& trace) {
    const auto& x1 = trace.channel("x1");
    const auto& x2 = trace.channel("x2");
    const auto& L = trace.channel("L");
    const auto& xh1 = trace.channel("xhat1");
    const auto& xh2 = trace.channel("xhat2");
    const auto& xh3 = trace.channel("xhat3");

    const std::size_t m = trace.samples();
    std::vector<double> e1(m), e2(m), e3(m);
    for (std::size_t k = 0; k < m; ++k) {
        e1[k] = x1[k] - xh1[k];
        e2[k] = x2[k] - xh2[k];
        e3[k] = L[k] - xh3[k];
    }

    const bool nested = trace.has("zhat1");
    if (nested) {
        const auto& zh1 = trace.channel("zhat1");
        const auto& zh2 = trace.channel("zhat2");
        const auto& zh3 = trace.channel("zhat3");
        std::vector<double> z1(m), z2(m), z3(m);
        for (std::size_t k = 0; k < m; ++k) {
            z1[k] = x1[k] - zh1[k];
            z2[k] = x2[k] - zh2[k];
            // the outer system's extended state is the inner residual e3
            z3[k] = e3[k] - zh3[k];
        }
        trace.add_channel("e1", std::move(e1));
        trace.add_channel("e2", std::move(e2));
        trace.add_channel("e3", std::move(e3));
        trace.add_channel("zeta1", std::move(z1));
        trace.add_channel("zeta2", std::move(z2));
        trace.add_channel("zeta3", std::move(z3));
    } else {
        trace.add_channel("e1", std::move(e1));
        trace.add_channel("e2", std::move(e2));
        trace.add_channel("e3", std::move(e3));
    }
}

}  // namespace nadrc
