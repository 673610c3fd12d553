#include "nadrc/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nadrc {

namespace {

void check_finite(const std::vector<double>& x, double t_from) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!std::isfinite(x[i]))
            throw IntegrationFault(t_from, static_cast<int>(i),
                                   "state channel " + std::to_string(i) +
                                       " became non-finite during the step starting at t=" +
                                       std::to_string(t_from));
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("integrator.step must be > 0");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrator.abs_tol must be > 0");
    if (!(rel_tol >= 0.0)) throw std::invalid_argument("integrator.rel_tol must be >= 0");
    if (!(max_step > 0.0)) throw std::invalid_argument("integrator.max_step must be > 0");
}

StateVector rk4_step(const Deriv& deriv, double t, const StateVector& x, double h) {
    const std::size_t dim = x.values.size();
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), yt(dim);

    deriv(t, x.values, k1);
    for (std::size_t i = 0; i < dim; ++i) yt[i] = x.values[i] + 0.5 * h * k1[i];
    deriv(t + 0.5 * h, yt, k2);
    for (std::size_t i = 0; i < dim; ++i) yt[i] = x.values[i] + 0.5 * h * k2[i];
    deriv(t + 0.5 * h, yt, k3);
    for (std::size_t i = 0; i < dim; ++i) yt[i] = x.values[i] + h * k3[i];
    deriv(t + h, yt, k4);

    StateVector out;
    out.t = t + h;
    out.values.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out.values[i] = x.values[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

SimulationTrace integrate_fixed(const Deriv& deriv, const std::vector<double>& x0,
                                double t0, double tf, double h,
                                const std::vector<std::string>& state_names,
                                const Recorder& hook) {
    if (!(h > 0.0)) throw std::invalid_argument("integrator.step must be > 0");
    if (!(tf > t0)) throw std::invalid_argument("horizon must end after it starts");
    if (state_names.size() != x0.size())
        throw std::invalid_argument("state name count does not match state dimension");

    const double span = tf - t0;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / h - 1e-9));

    SimulationTrace tr;
    tr.names = state_names;
    tr.columns.assign(x0.size(), {});
    tr.grid.reserve(n_steps + 1);
    for (auto& col : tr.columns) col.reserve(n_steps + 1);

    auto emit = [&](double t, const std::vector<double>& x) {
        tr.grid.push_back(t);
        for (std::size_t c = 0; c < x.size(); ++c) tr.columns[c].push_back(x[c]);
        if (hook) hook(t, x);
    };

    StateVector cur{t0, x0};
    emit(cur.t, cur.values);
    for (std::size_t i = 1; i <= n_steps; ++i) {
        // index-based targets keep the grid free of accumulated round-off;
        // the last step shrinks to land exactly on tf
        const double t_target = (i == n_steps) ? tf : t0 + static_cast<double>(i) * h;
        StateVector next = rk4_step(deriv, cur.t, cur, t_target - cur.t);
        next.t = t_target;
        check_finite(next.values, cur.t);
        cur = std::move(next);
        emit(cur.t, cur.values);
    }
    return tr;
}

SimulationTrace integrate_adaptive(const Deriv& deriv, const std::vector<double>& x0,
                                   double t0, double tf, const IntegratorConfig& cfg,
                                   double output_grid_step,
                                   const std::vector<std::string>& state_names,
                                   const Recorder& hook) {
    cfg.validate();
    if (!(output_grid_step > 0.0))
        throw std::invalid_argument("output_grid_step must be > 0");
    if (!(tf > t0)) throw std::invalid_argument("horizon must end after it starts");
    if (state_names.size() != x0.size())
        throw std::invalid_argument("state name count does not match state dimension");

    // Dormand-Prince 5(4) coefficients, including the dense-output quartic.
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                     a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                     d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                     d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

    const std::size_t dim = x0.size();
    const double span = tf - t0;

    SimulationTrace tr;
    tr.names = state_names;
    tr.columns.assign(dim, {});
    const auto n_uniform = static_cast<std::size_t>(std::floor(span / output_grid_step + 1e-9));
    tr.grid.reserve(n_uniform + 2);
    for (auto& col : tr.columns) col.reserve(n_uniform + 2);

    auto emit = [&](double t, const std::vector<double>& x) {
        tr.grid.push_back(t);
        for (std::size_t c = 0; c < dim; ++c) tr.columns[c].push_back(x[c]);
        if (hook) hook(t, x);
    };

    std::vector<double> y = x0;
    std::vector<double> y1(dim), yt(dim), err_vec(dim);
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    std::vector<double> r1(dim), r2(dim), r3(dim), r4(dim), r5(dim);

    emit(t0, y);
    std::size_t next_out = 1;

    double t = t0;
    double h = std::min({cfg.step, cfg.max_step, span});
    deriv(t, y, k1);  // FSAL: the accepted step's last stage seeds the next first stage

    // A discontinuous field (relay terms, sample-held noise) can pin the
    // accepted step near the tolerance scale without ever tripping the
    // underflow fault; the trial budget turns that endless grind into a
    // diagnosable fault instead.
    constexpr std::size_t kMaxStepTrials = 2'000'000;
    std::size_t trials = 0;

    while (t < tf) {
        if (++trials > kMaxStepTrials)
            throw IntegrationFault(
                t, -1,
                "step budget exhausted at t=" + std::to_string(t) +
                    " (dynamics too rough for error control at these tolerances; "
                    "use fixed-rk4)");
        if (h < 1e-12)
            throw IntegrationFault(t, -1,
                                   "step size underflow at t=" + std::to_string(t) +
                                       " (problem too stiff for the tolerance)");
        if (t + h > tf) h = tf - t;

        for (std::size_t i = 0; i < dim; ++i) yt[i] = y[i] + h * a21 * k1[i];
        deriv(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < dim; ++i)
            yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        deriv(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < dim; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        deriv(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < dim; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        deriv(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < dim; ++i)
            yt[i] = y[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        deriv(t + h, yt, k6);
        for (std::size_t i = 0; i < dim; ++i)
            y1[i] = y[i] +
                    h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        deriv(t + h, y1, k7);

        double err_sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            err_vec[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                              e6 * k6[i] + e7 * k7[i]);
            const double sc =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            const double r = err_vec[i] / sc;
            err_sq += r * r;
        }
        double err = std::sqrt(err_sq / static_cast<double>(dim));
        if (!std::isfinite(err)) err = 1e10;  // forces rejection and maximal shrink

        const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-300), -0.2), 0.2, 10.0);

        if (err > 1.0) {
            h *= std::min(fac, 1.0);
            continue;
        }

        check_finite(y1, t);
        const double t_new = (tf - t - h < 1e-14 * std::abs(tf)) ? tf : t + h;

        // dense output over (t, t_new]: quartic Hermite-type interpolant
        const bool need_interp =
            next_out <= n_uniform &&
            t0 + static_cast<double>(next_out) * output_grid_step <= t_new + 1e-12;
        if (need_interp) {
            for (std::size_t i = 0; i < dim; ++i) {
                const double dy = y1[i] - y[i];
                r1[i] = y[i];
                r2[i] = dy;
                r3[i] = h * k1[i] - dy;
                r4[i] = dy - h * k7[i] - r3[i];
                r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                             d6 * k6[i] + d7 * k7[i]);
            }
            while (next_out <= n_uniform) {
                const double t_out = t0 + static_cast<double>(next_out) * output_grid_step;
                if (t_out > t_new + 1e-12) break;
                const double theta = std::clamp((t_out - t) / h, 0.0, 1.0);
                for (std::size_t i = 0; i < dim; ++i)
                    yt[i] = r1[i] + theta * (r2[i] + (1.0 - theta) *
                                                         (r3[i] + theta * (r4[i] +
                                                                           (1.0 - theta) * r5[i])));
                emit(t_out, yt);
                ++next_out;
            }
        }

        t = t_new;
        y.swap(y1);
        k1.swap(k7);
        h = std::min(h * fac, cfg.max_step);
    }

    // when the span is not a whole number of grid steps the endpoint is still recorded
    if (tr.grid.empty() || tr.grid.back() < tf - 1e-9 * output_grid_step) emit(tf, y);
    return tr;
}

}  // namespace nadrc
