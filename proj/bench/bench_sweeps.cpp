// Serial reference loop vs the OpenMP runner on the same case sweeps.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "hocolim/coslice.hpp"
#include "hocolim/parallel.hpp"
#include "hocolim/random.hpp"
#include "hocolim/setmodel.hpp"

using namespace hocolim;

namespace {

CaseOutcome constructions_case(std::size_t k)
{
    auto rng = case_rng(1001, k);
    GenBounds b;
    auto d = random_adiagram(rng, random_graph(rng, b.max_vertices, b.max_edges), b, coin(rng));
    return {compare_constructions(d).passed(), {}};
}

CaseOutcome universal_property_case(std::size_t k)
{
    auto rng = case_rng(1002, k);
    auto d = random_coslice_set_diagram(rng, random_graph(rng, 3, 3), 2, 3);
    auto t = random_under_set(rng, d.base, 3);
    return {verify_universal_property(d, t).bijective(), {}};
}

CaseOutcome tree_creation_case(std::size_t k)
{
    auto rng = case_rng(1003, k);
    GenBounds b;
    b.max_cells = 6;
    auto d = random_adiagram(rng, random_tree(rng, uniform(rng, 1, 6)), b, coin(rng));
    return {check_tree_creation(d).passed(), {}};
}

void sweep(benchmark::State& state, CaseOutcome (*fn)(std::size_t), bool parallel)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto out = run_cases(n, fn, parallel);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
    state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

}  // namespace

BENCHMARK_CAPTURE(sweep, constructions_serial, constructions_case, false)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, constructions_omp, constructions_case, true)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, universal_property_serial, universal_property_case, false)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, universal_property_omp, universal_property_case, true)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, tree_creation_serial, tree_creation_case, false)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, tree_creation_omp, tree_creation_case, true)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
