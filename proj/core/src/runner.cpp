#include "nadrc/runner.hpp"

#include <cmath>
#include <stdexcept>

#include "nadrc/metrics.hpp"
#include "nadrc/observer.hpp"

namespace nadrc {

namespace {

// Closed-loop vector field shared by both variants. State layout:
//   [x1 x2 r1 r2 xhat1 xhat2 xhat3]            conventional (7)
//   [x1 x2 r1 r2 xhat1 xhat2 xhat3 zhat1..3]   nested (10)
struct ClosedLoop {
    const Scenario* s = nullptr;
    bool nested = false;
    std::vector<double> inner_gains;
    std::vector<double> outer_gains;
    NoiseSequence eta;

    // control values are pure functions of the state; the recorder reuses this
    NadrcControl control(const std::vector<double>& x) const {
        const double r1 = x[2], r2 = x[3];
        double e1, e2;
        if (nested) {
            e1 = r1 - x[7];
            e2 = r2 - x[8];
        } else {
            e1 = r1 - x[4];
            e2 = r2 - x[5];
        }
        const double u0 = state_error_feedback(e1, e2, s->feedback);
        if (nested) return nadrc_control(u0, x[9], x[6]);
        return {u0, cadrc_control(u0, x[6])};
    }

    void operator()(double t, const std::vector<double>& x, std::vector<double>& dx) const {
        const NadrcControl c = control(x);
        const double y = x[0] + eta(t);

        benchmark_plant_deriv(t, x.data(), c.u, s->plant, dx.data());

        TdState td{x[2], x[3]};
        td_deriv(td, s->reference.eval(t), s->td.R, dx.data() + 2);

        leso_deriv(x.data() + 4, y, c.u, inner_gains, 2, dx.data() + 4);
        if (nested) outer_leso_deriv(x.data() + 7, y, c.v, outer_gains, 2, dx.data() + 7);
    }
};

SimulationTrace subsample(SimulationTrace tr, std::size_t every) {
    if (every <= 1) return tr;
    SimulationTrace out;
    out.names = tr.names;
    out.columns.assign(tr.columns.size(), {});
    for (std::size_t k = 0; k < tr.samples(); k += every) {
        out.grid.push_back(tr.grid[k]);
        for (std::size_t c = 0; c < tr.columns.size(); ++c)
            out.columns[c].push_back(tr.columns[c][k]);
    }
    if ((tr.samples() - 1) % every != 0) {  // keep the horizon endpoint
        out.grid.push_back(tr.grid.back());
        for (std::size_t c = 0; c < tr.columns.size(); ++c)
            out.columns[c].push_back(tr.columns[c].back());
    }
    return out;
}

}  // namespace

RunResult run_scenario(const Scenario& s) {
    s.validate();

    ClosedLoop loop;
    loop.s = &s;
    loop.nested = s.variant == AdrcVariant::Nested;
    const LesoConfig inner{2, loop.nested ? s.inner_omega0 : s.conventional_omega0, {}};
    const LesoConfig outer{2, s.outer_omega0, {}};
    loop.inner_gains = inner.gains();
    if (loop.nested) loop.outer_gains = outer.gains();
    loop.eta = NoiseSequence(s.noise, s.output_grid_step);

    std::vector<std::string> names = {"x1", "x2", "r1", "r2", "xhat1", "xhat2", "xhat3"};
    if (loop.nested) {
        names.insert(names.end(), {"zhat1", "zhat2", "zhat3"});
    }
    const std::vector<double> x0(names.size(), 0.0);

    const Deriv deriv = [&loop](double t, const std::vector<double>& x,
                                std::vector<double>& dx) { loop(t, x, dx); };

    SimulationTrace tr;
    if (s.integrator.method == IntegrationMethod::FixedRk4) {
        tr = integrate_fixed(deriv, x0, 0.0, s.horizon, s.integrator.step, names);
        const auto every =
            static_cast<std::size_t>(std::llround(s.output_grid_step / s.integrator.step));
        tr = subsample(std::move(tr), every);
    } else {
        tr = integrate_adaptive(deriv, x0, 0.0, s.horizon, s.integrator,
                                s.output_grid_step, names);
    }

    // derived channels, recomputed from (t, state) on the output grid
    const std::size_t m = tr.samples();
    std::vector<double> r(m), y(m), u(m), v(m), L(m), track(m);
    std::vector<double> x(names.size());
    for (std::size_t k = 0; k < m; ++k) {
        const double t = tr.grid[k];
        for (std::size_t c = 0; c < names.size(); ++c) x[c] = tr.columns[c][k];
        const NadrcControl c = loop.control(x);
        r[k] = s.reference.eval(t);
        y[k] = x[0] + loop.eta(t);
        u[k] = c.u;
        v[k] = c.v;
        L[k] = total_disturbance(t, x.data(), c.u, s.plant);
        track[k] = x[2] - x[0];
    }
    tr.add_channel("r", std::move(r));
    tr.add_channel("y", std::move(y));
    tr.add_channel("u", std::move(u));
    if (loop.nested) tr.add_channel("v", std::move(v));
    tr.add_channel("L", std::move(L));
    tr.add_channel("track_err", std::move(track));

    estimation_errors(tr);

    RunResult out;
    out.scenario = s;
    out.metrics.itae = itae(tr.grid, tr.channel("track_err"));
    out.metrics.isu = isu(tr.grid, tr.channel("u"));
    out.metrics.itae_e3 = itae(tr.grid, tr.channel("e3"));
    out.metrics.itae_zeta3 = loop.nested ? itae(tr.grid, tr.channel("zeta3")) : 0.0;
    out.trace = std::move(tr);
    return out;
}

double CompareResult::itae_reduction(int noisy) const {
    return 100.0 * (itae[0][noisy] - itae[1][noisy]) / itae[0][noisy];
}

double CompareResult::isu_reduction(int noisy) const {
    return 100.0 * (isu[0][noisy] - isu[1][noisy]) / isu[0][noisy];
}

CompareResult compare_variants(const Scenario& base, AdrcVariant a, AdrcVariant b) {
    CompareResult out;
    const AdrcVariant variants[2] = {a, b};
    for (int vi = 0; vi < 2; ++vi)
        for (int nz = 0; nz < 2; ++nz) {
            Scenario s = base;
            s.variant = variants[vi];
            s.noise.enabled = nz == 1;
            out.runs[vi][nz] = run_scenario(s);
            out.itae[vi][nz] = out.runs[vi][nz].metrics.itae;
            out.isu[vi][nz] = out.runs[vi][nz].metrics.isu;
        }
    return out;
}

CompareResult compare_variants(const Scenario& base) {
    return compare_variants(base, AdrcVariant::Conventional, AdrcVariant::Nested);
}

}  // namespace nadrc
