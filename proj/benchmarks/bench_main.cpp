#include "envelope/calibration.hpp"
#include "envelope/closed_forms.hpp"
#include "envelope/et_solver.hpp"
#include "envelope/oracle2b.hpp"
#include "envelope/quantum_numbers.hpp"
#include "envelope/refdata.hpp"
#include "envelope/special_functions.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace envelope;

static void BM_LambertW0(benchmark::State& state) {
    double z = -0.36;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambert_w0(z));
        z = z > 50.0 ? -0.36 : z + 0.37;
    }
}
BENCHMARK(BM_LambertW0);

static void BM_GRoot(benchmark::State& state) {
    double y = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_root(QuarticSign::minus, y));
        y = y > 100.0 ? 0.0 : y + 0.7;
    }
}
BENCHMARK(BM_GRoot);

static void BM_GenericSolve(benchmark::State& state) {
    const auto preset = preset_by_name("lnb", static_cast<int>(state.range(0)));
    const auto h = preset.hamiltonian();
    const double q = global_q(StateSpec::ground(preset.particles), 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve(h, q));
}
BENCHMARK(BM_GenericSolve)->Arg(3)->Arg(30)->Arg(300);

static void BM_GenericSolveWithHint(benchmark::State& state) {
    const auto h = lnb_preset(3).hamiltonian();
    SolveOptions options;
    options.bracket_hint = std::pair{5.0, 7.0};
    for (auto _ : state) benchmark::DoNotOptimize(solve(h, 3.0, options));
}
BENCHMARK(BM_GenericSolveWithHint);

static void BM_ReferenceTable(benchmark::State& state) {
    const auto preset = lnb_preset(3);
    for (auto _ : state) {
        double sum = 0.0;
        for (const auto& r : table1())
            for (double phi : kTable1Phis) sum += preset_energy(preset, state_from_record(r), phi).energy;
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_ReferenceTable);

static void BM_GlobalFit(benchmark::State& state) {
    std::vector<ReferencePoint> points;
    for (const auto& r : table1()) points.push_back({state_from_record(r), r.exact});
    for (auto _ : state) benchmark::DoNotOptimize(fit_phi_dataset(lnb_preset(3), points, {0.5, 3.0}));
}
BENCHMARK(BM_GlobalFit);

static void BM_RadialGroundState(benchmark::State& state) {
    const RadialGrid grid{60.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(ground_energy(0.5, Coulomb{-1.0}, grid));
}
BENCHMARK(BM_RadialGroundState)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
