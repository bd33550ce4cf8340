#include <benchmark/benchmark.h>

#include "epr/analysis.hpp"
#include "epr/constraints.hpp"
#include "epr/sampling.hpp"
#include "epr/scenario.hpp"

using namespace epr;

namespace {

const Scenario& composite() {
    static const Scenario s =
        foulis_randall_product(make_local_scenario(), make_local_scenario());
    return s;
}

void BM_FoulisRandallProduct(benchmark::State& state) {
    const Scenario local = make_local_scenario();
    for (auto _ : state) {
        benchmark::DoNotOptimize(foulis_randall_product(local, local));
    }
}
BENCHMARK(BM_FoulisRandallProduct);

void BM_RejectionSampler(benchmark::State& state) {
    const ConstraintTable table = pr_box();
    SamplerConfig cfg;
    cfg.target_accepted = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(rejection_sample_run(table, cfg, composite()));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RejectionSampler)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_MetropolisSampler(benchmark::State& state) {
    const ConstraintTable table = pr_box();
    SamplerConfig cfg;
    cfg.method = SamplerMethod::metropolis_batch;
    cfg.target_accepted = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(metropolis_batch_run(table, cfg, composite()));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MetropolisSampler)->Arg(10000)->Arg(100000);

void BM_NormalizeAnalyze(benchmark::State& state) {
    SamplerConfig cfg;
    cfg.target_accepted = 100000;
    const Tally t = rejection_sample_run(tsirelson(), cfg, composite());
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(normalize(t, composite())));
    }
}
BENCHMARK(BM_NormalizeAnalyze);

void BM_RejectionParallel(benchmark::State& state) {
    const ConstraintTable table = pr_box();
    SamplerConfig cfg;
    cfg.target_accepted = 1000000;
    cfg.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(rejection_sample_run(table, cfg, composite()));
    }
}
BENCHMARK(BM_RejectionParallel)->Arg(1)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
