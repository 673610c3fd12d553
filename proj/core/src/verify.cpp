#include "nadrc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nadrc/lyapunov.hpp"
#include "nadrc/observer.hpp"

namespace nadrc {

bool BoundReport::all_within() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const BoundCell& c) { return c.within(); });
}

BoundReport verify_theorem1(const Scenario& base, const std::vector<double>& omega0_sweep,
                            double m_window_start) {
    if (omega0_sweep.empty())
        throw std::invalid_argument("omega0 sweep must not be empty");
    if (base.noise.enabled)
        throw std::invalid_argument("bound verification requires a noise-free scenario");

    constexpr int n = 2;  // the benchmark plant is a double integrator chain
    // P is solved for the time-scaled error dynamics, whose companion matrix
    // carries the bare binomial coefficients (omega0 factors out)
    const LyapunovResult lyap = solve_lyapunov(companion_matrix(bandwidth_gains(n, 1.0)));

    BoundReport report;
    report.omega0_sweep = omega0_sweep;

    std::vector<std::vector<double>> empirical_by_i(n + 1);
    for (const double omega0 : omega0_sweep) {
        Scenario s = base;
        s.variant = AdrcVariant::Conventional;
        s.conventional_omega0 = omega0;
        const RunResult run = run_scenario(s);

        const auto& g = run.trace.grid;
        const auto& L = run.trace.channel("L");
        const std::size_t m = run.trace.samples();

        double M = 0.0;
        for (std::size_t k = 1; k < m; ++k) {
            if (g[k] < m_window_start) continue;
            M = std::max(M, std::abs((L[k] - L[k - 1]) / (g[k] - g[k - 1])));
        }
        report.m_estimates.push_back(M);

        const double t_steady = g.front() + 0.8 * (g.back() - g.front());
        const char* err_names[] = {"e1", "e2", "e3"};
        for (int i = 1; i <= n + 1; ++i) {
            const auto& e = run.trace.channel(err_names[i - 1]);
            double emp = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                if (g[k] >= t_steady) emp = std::max(emp, std::abs(e[k]));
            BoundCell cell;
            cell.omega0 = omega0;
            cell.i = i;
            cell.theoretical = theorem1_bound(M, lyap, omega0, n, i);
            cell.empirical = emp;
            cell.ratio = cell.theoretical > 0.0 ? emp / cell.theoretical : 0.0;
            report.cells.push_back(cell);
            empirical_by_i[i - 1].push_back(emp);
        }
    }

    // least-squares slope of log(empirical) vs log(omega0), one fit per state index
    report.slope.assign(n + 1, 0.0);
    const std::size_t nw = omega0_sweep.size();
    if (nw >= 2) {
        for (int i = 0; i <= n; ++i) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t j = 0; j < nw; ++j) {
                const double x = std::log(omega0_sweep[j]);
                const double y = std::log(std::max(empirical_by_i[i][j], 1e-30));
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            const double denom = nw * sxx - sx * sx;
            report.slope[i] = denom != 0.0 ? (nw * sxy - sx * sy) / denom : 0.0;
        }
    }
    return report;
}

Lemma2Report lemma2_check(const SimulationTrace& trace, double beta_np1) {
    const auto& g = trace.grid;
    const auto& e3 = trace.channel("e3");
    const auto& e1 = trace.channel("e1");
    const auto& L = trace.channel("L");
    const std::size_t m = trace.samples();
    if (m < 3) throw std::invalid_argument("trace too short for finite differences");

    const double t_steady = g.front() + 0.8 * (g.back() - g.front());
    const double h = (g.back() - g.front()) / static_cast<double>(m - 1);

    // the slack absorbs the O(h) truncation error of the one-sided differences,
    // scaled by the measured curvature of e3 over the same window
    double max_curv = 0.0;
    for (std::size_t k = 1; k + 1 < m; ++k) {
        if (g[k] < t_steady) continue;
        const double hk = 0.5 * (g[k + 1] - g[k - 1]);
        const double dd = (e3[k + 1] - 2.0 * e3[k] + e3[k - 1]) / (hk * hk);
        max_curv = std::max(max_curv, std::abs(dd));
    }

    Lemma2Report rep;
    rep.slack = 10.0 * h * max_curv;
    for (std::size_t k = 1; k < m; ++k) {
        if (g[k] < t_steady) continue;
        const double dt = g[k] - g[k - 1];
        const double de3 = (e3[k] - e3[k - 1]) / dt;
        const double dL = (L[k] - L[k - 1]) / dt;
        ++rep.total;
        if (std::abs(de3) <= std::abs(dL) + std::abs(beta_np1 * e1[k]) + rep.slack)
            ++rep.satisfied;
    }
    return rep;
}

}  // namespace nadrc
