#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "solvspec/dynamics.hpp"
#include "solvspec/fitting.hpp"
#include "solvspec/spectral.hpp"

using namespace solvspec;

namespace {

const DebyeDielectric kWater{78.3, 4.21, 8.2};
const DebyeDielectric kProtein{15.0, 2.0, 1e4};
const DebyeDielectric kBound{40.0, 4.21, 40.0};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return g;
}

void chi_closed_form_grid(benchmark::State& state) {
    ThreeRegionGeometry g{3.0, 10.0, StaticDielectric{1.0}, kProtein, kWater};
    const auto grid = log_grid(1e-6, 1e4, 400);
    for (auto _ : state) {
        double acc = 0.0;
        for (double w : grid) acc += chi_closed_form(g, w).imag();
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(chi_closed_form_grid);

void chi_linear_solve_grid(benchmark::State& state) {
    ThreeRegionGeometry g{3.0, 10.0, StaticDielectric{1.0}, kProtein, kWater};
    const auto grid = log_grid(1e-6, 1e4, 400);
    for (auto _ : state) {
        double acc = 0.0;
        for (double w : grid) acc += chi_linear_solve(g, w).imag();
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(chi_linear_solve_grid);

void composed_three_component_grid(benchmark::State& state) {
    const ThreeComponentEnvironment env{kProtein, kBound, kWater, 3.0, 10.0, 14.5, 1.0};
    const auto grid = log_grid(1e-6, 1e3, 400);
    for (auto _ : state) {
        double acc = 0.0;
        for (double w : grid) acc += j_three_component(env, w);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(composed_three_component_grid);

void decoherence_gamma_point(benchmark::State& state) {
    const auto j = SpectralDensity::from_lorentzians({{{1.0, 1.0}}});
    const double t = double(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dynamics::decoherence_gamma(j, t, 300.0));
    }
}
BENCHMARK(decoherence_gamma_point)->Arg(1)->Arg(10)->Arg(100);

void hydration_quadrature_point(benchmark::State& state) {
    const auto j = SpectralDensity::from_lorentzians({{{0.7, 0.3}, {1.3, 2.0}, {0.4, 17.0}}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dynamics::hydration_correlation(j, 35.0, IntegrationRoute::quadrature));
    }
}
BENCHMARK(hydration_quadrature_point);

void biexponential_fit(benchmark::State& state) {
    fitting::CorrelationSamples data;
    for (int i = 0; i < 200; ++i) {
        const double t = 1e-3 * std::pow(20.0 / 1e-3, i / 199.0);
        data.points.push_back(
            {t, 0.55 * std::exp(-t / 0.34) + 0.45 * std::exp(-t / 1.6), std::nullopt});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(fitting::fit_multiexponential(data, 2));
    }
}
BENCHMARK(biexponential_fit);

} // namespace

BENCHMARK_MAIN();
