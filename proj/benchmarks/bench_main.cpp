#include <benchmark/benchmark.h>

#include "fano/poly.hpp"

using namespace fano;

static void bm_poly_pow(benchmark::State& state) {
    VarId x = intern_symbol("bx"), y = intern_symbol("by");
    Poly p = Poly::variable(x) + Poly::variable(y) + Poly(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.pow(static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(bm_poly_pow)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
