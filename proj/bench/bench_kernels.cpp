#include <memory>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mhg/jack.hpp"
#include "mhg/partition.hpp"
#include "mhg/series.hpp"

namespace {

std::vector<double> draw(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    return x;
}

// Jack table fill alone; args are (m, n).
void jack_fill(benchmark::State& state, mhg::Kernel kernel) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto x = draw(static_cast<std::size_t>(n));
    auto table = std::make_shared<const mhg::PartitionTable>(mhg::PartitionTable::build(m, n));
    for (auto _ : state) {
        mhg::JackWorkspace ws(table, 2.0, x);
        ws.fill(kernel);
        benchmark::DoNotOptimize(ws.value(table->count(), n));
    }
    state.counters["partitions"] = static_cast<double>(table->count());
}

// Full 1F1 evaluation, table build included.
void series(benchmark::State& state, mhg::Kernel kernel) {
    const int m = static_cast<int>(state.range(0));
    const auto x = draw(static_cast<std::size_t>(state.range(1)));
    const mhg::SeriesParameters sp{2.0, {1.5}, {3.3}, m};
    for (auto _ : state) benchmark::DoNotOptimize(mhg::hg_general(sp, x, std::nullopt, kernel).value);
}

void sizes(benchmark::internal::Benchmark* b) {
    for (int n : {5, 20, 40, 80}) b->Args({20, n});
    b->Args({30, 120});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(jack_fill, serial, mhg::Kernel::serial)->Apply(sizes);
BENCHMARK_CAPTURE(jack_fill, parallel, mhg::Kernel::parallel)->Apply(sizes);
BENCHMARK_CAPTURE(series, serial, mhg::Kernel::serial)->Apply(sizes);
BENCHMARK_CAPTURE(series, parallel, mhg::Kernel::parallel)->Apply(sizes);

BENCHMARK_MAIN();
