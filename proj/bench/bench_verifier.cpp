#include "ncstar/verifier.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace ncstar;

namespace {

CommutationPair mixed3() {
    return CommutationPair::validate({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});
}

VerifyOptions opts(Execution e) {
    VerifyOptions o;
    o.execution = e;
    o.jobs = omp_get_max_threads();
    return o;
}

void BM_HopfSerial(benchmark::State& st) {
    auto p = mixed3();
    for (auto _ : st) benchmark::DoNotOptimize(verify_comultiplication(p, opts(Execution::Serial)));
}

void BM_HopfParallel(benchmark::State& st) {
    auto p = mixed3();
    for (auto _ : st) benchmark::DoNotOptimize(verify_comultiplication(p, opts(Execution::Parallel)));
}

void BM_SphereActionSerial(benchmark::State& st) {
    auto p = regularize(mixed3());
    for (auto _ : st) benchmark::DoNotOptimize(verify_sphere_action(p, Side::Left, opts(Execution::Serial)));
}

void BM_SphereActionParallel(benchmark::State& st) {
    auto p = regularize(mixed3());
    for (auto _ : st) benchmark::DoNotOptimize(verify_sphere_action(p, Side::Left, opts(Execution::Parallel)));
}

void BM_RegularizationSerial(benchmark::State& st) {
    auto p = mixed3();
    auto o = opts(Execution::Serial);
    o.product_bound = 4;
    for (auto _ : st) benchmark::DoNotOptimize(verify_regularization_consistency(p, o));
}

void BM_RegularizationParallel(benchmark::State& st) {
    auto p = mixed3();
    auto o = opts(Execution::Parallel);
    o.product_bound = 4;
    for (auto _ : st) benchmark::DoNotOptimize(verify_regularization_consistency(p, o));
}

}  // namespace

BENCHMARK(BM_HopfSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HopfParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereActionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereActionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularizationSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularizationParallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
