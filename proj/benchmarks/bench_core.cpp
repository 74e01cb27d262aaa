#include <benchmark/benchmark.h>

#include "fbp/bessel.hpp"
#include "fbp/bifurcation.hpp"
#include "fbp/fbp_solver.hpp"

namespace {

void BM_BesselI(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fbp::besseli(static_cast<int>(state.range(1)), x));
    }
}
BENCHMARK(BM_BesselI)->Args({2, 2})->Args({10, 20})->Args({50, 100});

void BM_MuN(benchmark::State& state) {
    const fbp::StationaryState s = fbp::StationaryState::from_radius(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fbp::mu_n(s, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_MuN)->Arg(2)->Arg(12)->Arg(50);

void BM_PitchforkReport(benchmark::State& state) {
    const fbp::StationaryState s = fbp::StationaryState::from_radius(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fbp::pitchfork_report(s, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_PitchforkReport)->Arg(2)->Arg(12);

void BM_EvaluateF(benchmark::State& state) {
    const int nr = static_cast<int>(state.range(0));
    const fbp::StationaryState s = fbp::StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(fbp::SolverGrid(nr, 2 * (nr - 4)), s);
    const fbp::BoundaryShape shape = fbp::BoundaryShape::mode(2, 0.05);
    const double mu = fbp::mu_n(s, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.evaluate_F(mu, shape));
    }
}
BENCHMARK(BM_EvaluateF)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
