#include <benchmark/benchmark.h>

#include "cartan/model.hpp"

using namespace cartan;

namespace {

cr::CRFrame model_frame() {
    return cr::derived_frame(cr::cr_generator(model::model_manifold()));
}

void BM_Classify(benchmark::State& state) {
    cr::GraphedManifold m = model::model_manifold();
    for (auto _ : state) {
        cr::ClassReport rep = cr::classify(m);
        benchmark::DoNotOptimize(rep.member);
    }
}
BENCHMARK(BM_Classify);

void BM_Fundamentals(benchmark::State& state) {
    cr::CRFrame f = model_frame();
    for (auto _ : state) {
        cr::Fundamentals fun = cr::fundamentals(f);
        benchmark::DoNotOptimize(fun.B);
    }
}
BENCHMARK(BM_Fundamentals);

void BM_TorsionTable(benchmark::State& state) {
    cr::CRFrame f = model_frame();
    cr::Fundamentals fun = cr::fundamentals(f);
    for (auto _ : state) {
        cr::TorsionTable tt = cr::torsion_table(f, fun);
        benchmark::DoNotOptimize(tt.K);
    }
}
BENCHMARK(BM_TorsionTable);

void BM_FullReduction(benchmark::State& state) {
    cr::CRFrame f = model_frame();
    cr::Fundamentals fun = cr::fundamentals(f);
    cr::TorsionTable tt = cr::torsion_table(f, fun);
    for (auto _ : state) {
        red::ReductionResult r = red::run_reduction(f, fun, tt);
        benchmark::DoNotOptimize(r.inv);
    }
}
BENCHMARK(BM_FullReduction);

void BM_ModelAlgebraSuite(benchmark::State& state) {
    for (auto _ : state) {
        CheckList all = model::verify_model();
        benchmark::DoNotOptimize(all.items.size());
    }
}
BENCHMARK(BM_ModelAlgebraSuite);

}  // namespace

BENCHMARK_MAIN();
