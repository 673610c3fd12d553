#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "nadrc/integrator.hpp"
#include "nadrc/lyapunov.hpp"
#include "nadrc/metrics.hpp"
#include "nadrc/noise.hpp"
#include "nadrc/observer.hpp"
#include "nadrc/runner.hpp"

namespace {

void BM_Rk4Step(benchmark::State& state) {
    const nadrc::Deriv deriv = [](double, const std::vector<double>& x,
                                  std::vector<double>& dx) {
        dx[0] = x[1];
        dx[1] = -x[0];
    };
    nadrc::StateVector x{0.0, {1.0, 0.0}};
    for (auto _ : state) {
        x = nadrc::rk4_step(deriv, x.t, x, 1e-3);
        benchmark::DoNotOptimize(x.values[0]);
    }
}
BENCHMARK(BM_Rk4Step);

void BM_LesoDeriv(benchmark::State& state) {
    const std::vector<double> gains = nadrc::bandwidth_gains(2, 50.0);
    const double xhat[3] = {0.3, -0.1, 0.05};
    double dxhat[3];
    for (auto _ : state) {
        nadrc::leso_deriv(xhat, 0.31, 1.7, gains, 2, dxhat);
        benchmark::DoNotOptimize(dxhat[0]);
    }
}
BENCHMARK(BM_LesoDeriv);

void BM_SolveLyapunov(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const nadrc::Matrix A = nadrc::companion_matrix(nadrc::bandwidth_gains(n, 1.0));
    for (auto _ : state) {
        const nadrc::LyapunovResult r = nadrc::solve_lyapunov(A);
        benchmark::DoNotOptimize(r.lambda_min);
    }
}
BENCHMARK(BM_SolveLyapunov)->Arg(1)->Arg(2)->Arg(3);

void BM_JacobiEigen(benchmark::State& state) {
    const nadrc::LyapunovResult r =
        nadrc::solve_lyapunov(nadrc::companion_matrix(nadrc::bandwidth_gains(3, 1.0)));
    for (auto _ : state) {
        const std::vector<double> eig = nadrc::jacobi_eigenvalues(r.P);
        benchmark::DoNotOptimize(eig[0]);
    }
}
BENCHMARK(BM_JacobiEigen);

void BM_GaussianNoise(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const std::vector<double> v = nadrc::gaussian_noise(42, 1e-4, n);
        benchmark::DoNotOptimize(v[0]);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}
BENCHMARK(BM_GaussianNoise)->Arg(1024)->Arg(20001);

void BM_Itae(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> grid(n), err(n);
    for (std::size_t k = 0; k < n; ++k) {
        grid[k] = 1e-3 * static_cast<double>(k);
        err[k] = std::sin(grid[k]);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(nadrc::itae(grid, err));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}
BENCHMARK(BM_Itae)->Arg(20001);

void BM_RunScenarioShort(benchmark::State& state) {
    nadrc::Scenario s = nadrc::default_benchmark_scenario();
    s.horizon = 1.0;
    s.variant = state.range(0) ? nadrc::AdrcVariant::Nested : nadrc::AdrcVariant::Conventional;
    for (auto _ : state) {
        const nadrc::RunResult r = nadrc::run_scenario(s);
        benchmark::DoNotOptimize(r.metrics.itae);
    }
}
BENCHMARK(BM_RunScenarioShort)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
