#include <benchmark/benchmark.h>

#include "stepsched/exact.hpp"
#include "stepsched/generator.hpp"
#include "stepsched/instance_io.hpp"
#include "stepsched/metaheuristics.hpp"
#include "stepsched/neighborhoods.hpp"
#include "stepsched/swsp.hpp"

using namespace stepsched;

namespace {

Instance sized(benchmark::State& state) {
    return generate_instance(GenSpec{static_cast<std::size_t>(state.range(0)), 3, 2, 0.5, 42});
}

void BM_Evaluate(benchmark::State& state) {
    const Instance inst = sized(state);
    const Evaluator eval(inst);
    const Sequence seq = edd_sequence(inst);
    for (auto _ : state) benchmark::DoNotOptimize(eval.total(seq.order));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(25)->Arg(100);

void BM_Descend(benchmark::State& state) {
    const Instance inst = sized(state);
    const Evaluator eval(inst);
    const Sequence start = edd_sequence(inst);
    const auto kind = neighborhood_from_index(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(descend(eval, start, kind));
}
BENCHMARK(BM_Descend)->ArgsProduct({{25, 50}, {1, 2, 3, 4, 5}})->Unit(benchmark::kMicrosecond);

void BM_Swsp(benchmark::State& state) {
    const Instance inst = sized(state);
    for (auto _ : state) benchmark::DoNotOptimize(swsp(inst).run.best_value);
}
BENCHMARK(BM_Swsp)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Gvns(benchmark::State& state) {
    const Instance inst = sized(state);
    SearchParams p;
    for (auto _ : state) benchmark::DoNotOptimize(gvns(inst, p).best_value);
}
BENCHMARK(BM_Gvns)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Vns(benchmark::State& state) {
    const Instance inst = sized(state);
    SearchParams p;
    for (auto _ : state) benchmark::DoNotOptimize(vns(inst, p).best_value);
}
BENCHMARK(BM_Vns)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
    const Instance inst = example8_instance();
    for (auto _ : state) benchmark::DoNotOptimize(branch_and_bound(inst).best_value);
}
BENCHMARK(BM_BranchAndBound)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
