// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "clusterability/kernels.hpp"
#include "clusterability/rng.hpp"

using namespace clusterability;
using kernels::Exec;

namespace {

Dataset random_dataset(std::size_t n, std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> coords(n * dim);
    for (auto& c : coords) c = rng.normal();
    return Dataset(dim, coords);
}

template <Exec E>
void bm_assign_nearest(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto data = random_dataset(n, 8, 1);
    const auto centers = random_dataset(16, 8, 2);
    std::vector<std::size_t> labels(n);
    std::vector<double> dist(n);
    for (auto _ : state) {
        kernels::assign_nearest(E, data, centers, labels, dist);
        benchmark::DoNotOptimize(dist.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <Exec E>
void bm_pair_sums(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto data = random_dataset(n, 4, 3);
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i % 5;
    std::vector<double> rows(n);
    for (auto _ : state) {
        kernels::same_cluster_pair_sums(E, data, labels, rows);
        benchmark::DoNotOptimize(rows.data());
    }
}

template <Exec E>
void bm_distance_histogram(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto data = random_dataset(n, 2, 4);
    for (auto _ : state) {
        auto counts = kernels::pairwise_distance_counts(E, data, 50, 10.0);
        benchmark::DoNotOptimize(counts.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}

template <Exec E>
void bm_enumerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto data = random_dataset(n, 2, 5);
    for (auto _ : state) {
        auto best = kernels::enumerate_partitions(E, data, 3);
        benchmark::DoNotOptimize(best.cost);
    }
}

}  // namespace

BENCHMARK(bm_assign_nearest<Exec::serial>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_assign_nearest<Exec::parallel>)->Arg(10000)->Arg(100000);
BENCHMARK(bm_pair_sums<Exec::serial>)->Arg(2000);
BENCHMARK(bm_pair_sums<Exec::parallel>)->Arg(2000);
BENCHMARK(bm_distance_histogram<Exec::serial>)->Arg(2000);
BENCHMARK(bm_distance_histogram<Exec::parallel>)->Arg(2000);
BENCHMARK(bm_enumerate<Exec::serial>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate<Exec::parallel>)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
