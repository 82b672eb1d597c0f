#include <benchmark/benchmark.h>

#include "quantfam/distribution.hpp"
#include "quantfam/estimators.hpp"
#include "quantfam/lmoments.hpp"

using namespace quantfam;

namespace {

const FamilySpec kHeavy = FamilySpec::gh(0, 1, 0.5, 0.2);

void TransformEval(benchmark::State& state) {
    double w = -4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(transform(w, kHeavy));
        w += 0.001;
        if (w > 4.0) w = -4.0;
    }
}
BENCHMARK(TransformEval);

void QuantileEval(benchmark::State& state) {
    double u = 0.001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantile(QuantileLevel(u), kHeavy));
        u += 0.0001;
        if (u > 0.999) u = 0.001;
    }
}
BENCHMARK(QuantileEval);

void InverseQuantile(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_quantile(x, kHeavy));
        x += 0.01;
        if (x > 5.0) x = -1.0;
    }
}
BENCHMARK(InverseQuantile);

void PdfEval(benchmark::State& state) {
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pdf(x, kHeavy));
        x += 0.01;
        if (x > 5.0) x = -1.0;
    }
}
BENCHMARK(PdfEval);

void PopulationLMoments(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(population_lmoments(kHeavy));
    }
}
BENCHMARK(PopulationLMoments);

void SampleLMoments(benchmark::State& state) {
    SamplePayload p = sample(static_cast<int>(state.range(0)), 7, kHeavy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_lmoments(p.values));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SampleLMoments)->Range(1000, 100000)->Complexity();

void Sampling(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(static_cast<int>(state.range(0)), 7, kHeavy));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(Sampling)->Range(1000, 100000)->Complexity();

void FitMolmGH(benchmark::State& state) {
    SamplePayload p = sample(1000, 7, kHeavy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_molm(p.values, FamilyKind::GH));
    }
}
BENCHMARK(FitMolmGH);

void FitMomGH(benchmark::State& state) {
    SamplePayload p = sample(1000, 7, kHeavy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_mom(p.values));
    }
}
BENCHMARK(FitMomGH);

}  // namespace

BENCHMARK_MAIN();
