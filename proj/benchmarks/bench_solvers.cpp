#include <benchmark/benchmark.h>

#include "sps/operators.hpp"
#include "sps/representer.hpp"
#include "sps/simulate.hpp"
#include "sps/solvers.hpp"
#include "sps/tuning.hpp"

namespace {

using namespace sps;

ProblemInstance instance_for(int n, std::uint64_t seed) {
    GroundTruth truth = gen_scene(default_scene(n, seed));
    ProblemInstance inst;
    inst.pattern = gen_pattern(n, 0.3, n / 8.0, seed + 1);
    Image total(n, truth.x1_true.data + truth.x2_true.data);
    inst.y = add_noise(inst.pattern, forward(inst.pattern, total), 20.0, seed + 2);
    inst.lambda2 = lambda2_from_alpha(0.5, n);
    inst.lambda1 = lambda1_from_alpha(0.08, inst.pattern, inst.lambda2, inst.y);
    return inst;
}

void BM_Forward(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProblemInstance inst = instance_for(n, 1);
    Image x = Image::zero(n);
    x.data.setOnes();
    for (auto _ : state) benchmark::DoNotOptimize(forward(inst.pattern, x));
}
BENCHMARK(BM_Forward)->Arg(64)->Arg(128)->Arg(256);

void BM_Adjoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProblemInstance inst = instance_for(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(adjoint(inst.pattern, inst.y));
}
BENCHMARK(BM_Adjoint)->Arg(64)->Arg(128)->Arg(256);

void BM_SmoothClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProblemInstance inst = instance_for(n, 3);
    DiagonalWeights w = build_weights(inst.pattern, inst.lambda2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_smooth_closed_form(w, inst.y));
}
BENCHMARK(BM_SmoothClosedForm)->Arg(64)->Arg(128)->Arg(256);

void BM_SolveDecoupled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProblemInstance inst = instance_for(n, 4);
    SolverConfig cfg;
    cfg.rel_tol = 1e-4;
    for (auto _ : state) benchmark::DoNotOptimize(solve_decoupled(inst, cfg));
}
BENCHMARK(BM_SolveDecoupled)->Unit(benchmark::kMillisecond)->Arg(64)->Arg(128);

void BM_SolveCoupled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ProblemInstance inst = instance_for(n, 4);
    SolverConfig cfg;
    cfg.rel_tol = 1e-4;
    for (auto _ : state) benchmark::DoNotOptimize(solve_coupled(inst, cfg));
}
BENCHMARK(BM_SolveCoupled)->Unit(benchmark::kMillisecond)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
