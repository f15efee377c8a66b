#include <benchmark/benchmark.h>

#include "dfreq/derangement_set.hpp"
#include "dfreq/frequency.hpp"
#include "dfreq/oracle.hpp"
#include "dfreq/perm.hpp"

namespace {

using namespace dfreq;

void BM_ClosedFormFrequency(benchmark::State& state) {
    const auto w = max_rate_derangement(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(frequency(w));
}
BENCHMARK(BM_ClosedFormFrequency)->Arg(7)->Arg(16)->Arg(64);

void BM_CheckMembership(benchmark::State& state) {
    const auto g = parse_graph("7\n1 2\n2 3\n3 4\n3 5\n5 6\n6 7\n");
    const auto w = parse_derangement("(13472)(56)", 7);
    for (auto _ : state) benchmark::DoNotOptimize(check_membership(g, w));
}
BENCHMARK(BM_CheckMembership);

// One full brute-force oracle pass; n = 7 is 2^21 graphs.
void BM_OracleFrequency(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = max_rate_derangement(n);
    const OracleOptions opts{static_cast<int>(state.range(1)), false};
    for (auto _ : state) benchmark::DoNotOptimize(oracle_frequency(w, opts).count);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graph_count(n)));
}
BENCHMARK(BM_OracleFrequency)->Args({5, 1})->Args({6, 1})->Args({7, 1})->Args({7, 8})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnumerateDerangements(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_derangement(n, [&](const Derangement&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateDerangements)->Arg(6)->Arg(8);

void BM_SampleRate(benchmark::State& state) {
    const auto w = parse_derangement("(13472)(56)", 7);
    for (auto _ : state) benchmark::DoNotOptimize(sample_rate(w, 100000, 42));
}
BENCHMARK(BM_SampleRate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
