// Microbenchmarks for the hot paths: the analytic block spectrum vs the
// dense Jacobi eigensolver, closed-form vs RK4 evolution, and the scan
// drivers behind the CLI commands.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "noonsim/interferometry.hpp"
#include "noonsim/partial_transpose.hpp"
#include "noonsim/sweep.hpp"

namespace {

using namespace noonsim;

TwoModeNState random_state(int n, std::mt19937& gen) {
    const int dim = n + 1;
    std::normal_distribution<double> nd(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = Complex{nd(gen), nd(gen)};
    }
    ComplexMatrix rho(dim);
    Complex tr{0.0, 0.0};
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex acc{0.0, 0.0};
            for (int l = 0; l < dim; ++l) acc += g(i, l) * std::conj(g(j, l));
            rho(i, j) = acc;
        }
        tr += rho(i, i);
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) rho(i, j) /= tr.real();
    }
    return TwoModeNState(n, std::move(rho));
}

void BM_PtSpectrumAnalytic(benchmark::State& state) {
    std::mt19937 gen(42u);
    const TwoModeNState s = random_state(static_cast<int>(state.range(0)), gen);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pt_spectrum_analytic(s));
    }
}
BENCHMARK(BM_PtSpectrumAnalytic)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_PtSpectrumJacobi(benchmark::State& state) {
    std::mt19937 gen(42u);
    const TwoModeNState s = random_state(static_cast<int>(state.range(0)), gen);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pt_spectrum_numeric(s));
    }
}
BENCHMARK(BM_PtSpectrumJacobi)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_EvolveAnalytic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 gen(7u);
    const TwoModeNState s0 = random_state(n, gen);
    const DephasingParams p{0.4, 0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_analytic(s0, p, 1.0));
    }
}
BENCHMARK(BM_EvolveAnalytic)->Arg(2)->Arg(8)->Arg(16);

void BM_EvolveRk4(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 gen(7u);
    const TwoModeNState s0 = random_state(n, gen);
    const DephasingParams p{0.4, 0.6};
    const int steps = recommended_steps(n, p, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_numeric(s0, p, 1.0, steps));
    }
}
BENCHMARK(BM_EvolveRk4)->Arg(2)->Arg(8);

void BM_NegativityScan(benchmark::State& state) {
    SweepSpec spec;
    spec.command = Command::NegativityScan;
    spec.n_list = {static_cast<int>(state.range(0))};
    spec.t_grid.end = 10.0;
    spec.t_grid.steps = 101;
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_csv(spec));
    }
}
BENCHMARK(BM_NegativityScan)->Arg(3)->Arg(8);

void BM_Visibility(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TwoModeNState s = evolve_analytic(make_noon(n, 0.3), {0.5, 0.5}, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(visibility(s, default_phi_samples(n)));
    }
}
BENCHMARK(BM_Visibility)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
