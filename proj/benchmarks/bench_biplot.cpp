#include <biplot/baselines.hpp>
#include <biplot/biplot.hpp>
#include <biplot/cases.hpp>
#include <biplot/linalg.hpp>
#include <biplot/report.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

biplot::Matrix random_matrix(std::size_t n, std::size_t p) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> dist;
    biplot::Matrix m(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) m(i, j) = dist(rng);
    return m;
}

void BM_Svd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const biplot::Matrix m = random_matrix(n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(biplot::svd(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_AnalyzeCase(benchmark::State& state) {
    const biplot::DataTable table = biplot::load_case(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(biplot::analyze(table, biplot::PreprocessMode::zscore, 1.0, 2));
}
BENCHMARK(BM_AnalyzeCase)->DenseRange(1, 3);

void BM_ClassicalMds(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const biplot::Matrix d = biplot::pairwise_distances(random_matrix(n, 6));
    for (auto _ : state) benchmark::DoNotOptimize(biplot::classical_mds(d, 2));
}
BENCHMARK(BM_ClassicalMds)->RangeMultiplier(2)->Range(8, 128);

void BM_CorrespondenceAnalysis(benchmark::State& state) {
    const biplot::DataTable table = biplot::load_case(1);
    for (auto _ : state) benchmark::DoNotOptimize(biplot::correspondence_analysis(table, 2));
}
BENCHMARK(BM_CorrespondenceAnalysis);

} // namespace

BENCHMARK_MAIN();
