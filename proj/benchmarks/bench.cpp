#include <benchmark/benchmark.h>

#include "vknot/census.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/hom_count.hpp"
#include "vknot/presentation.hpp"
#include "vknot/quandle.hpp"

using namespace vknot;

namespace {

const char* kExampleCode = "UA+OB-UC+OD+OA+UB-UD+OC+";

void BM_CountHoms(benchmark::State& state) {
    const GaussCode code = parse_text(kExampleCode);
    const RelationList rel = upper_relations(code);
    const QuandleTable t = builtin("T6");
    for (auto _ : state) benchmark::DoNotOptimize(count_homs(rel, t));
}
BENCHMARK(BM_CountHoms);

void BM_QDiff(benchmark::State& state) {
    const GaussCode code = parse_text(kExampleCode);
    const QuandleTable t = builtin("T6");
    for (auto _ : state) benchmark::DoNotOptimize(qdiff(code, t));
}
BENCHMARK(BM_QDiff);

void BM_Gfix(benchmark::State& state) {
    const GaussCode flipped = flip(parse_text(kExampleCode));
    for (auto _ : state) benchmark::DoNotOptimize(gfix(flipped));
}
BENCHMARK(BM_Gfix);

void BM_Enumerate(benchmark::State& state) {
    const int crossings = static_cast<int>(state.range(0));
    const EnumerationOptions opts = default_conventions();
    for (auto _ : state) {
        std::int64_t count = 0;
        enumerate_codes(crossings, opts, [&](const GaussCode&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4);

void BM_Census(benchmark::State& state) {
    CensusConfig cfg;
    cfg.crossings = static_cast<int>(state.range(0));
    cfg.jobs = static_cast<int>(state.range(1));
    for (const auto& name : builtin_names()) cfg.quandles.push_back({name, builtin(name)});
    for (auto _ : state) benchmark::DoNotOptimize(run_census(cfg));
}
BENCHMARK(BM_Census)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
