// Serial reference vs OpenMP tally over one lattice block.

#include <benchmark/benchmark.h>

#include <vector>

#include "vw/kernels.hpp"

namespace {

std::vector<long> covector(const vw::Gram& g, long r)
{
    std::vector<long> c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t k = 0; k < g.size(); ++k)
            c[i] += g[i][k] * static_cast<long>((k + 1) % r);
    for (auto& x : c)
        x = ((x % r) + r) % r;
    return c;
}

template <auto Kernel>
void BM_e8(benchmark::State& state)
{
    const long r = state.range(0);
    const vw::Gram g = vw::e8_negative_gram();
    const std::vector<long> c = covector(g, r);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(g, c, r));
    long total = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
        total *= r;
    state.SetItemsProcessed(state.iterations() * total);
}

} // namespace

BENCHMARK(BM_e8<vw::kernels::tally_serial>)->Name("tally_serial/E8")->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_e8<vw::kernels::tally_parallel>)->Name("tally_parallel/E8")->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
