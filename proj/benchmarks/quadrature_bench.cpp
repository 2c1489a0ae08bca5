#include <benchmark/benchmark.h>

#include "ellhyp/integrals.hpp"

using namespace ellhyp;

namespace {

// C_n type I integral on balanced parameters; n = 2 dominates suite time
void BM_TypeICIntegral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Context c;
    c.p = 0.12;
    c.q = cplx(0.1, 0.08);
    std::vector<cplx> t;
    cplx prod = 1.0;
    for (int i = 0; i < 2 * n + 3; ++i) {
        t.push_back(std::polar(0.6 + 0.03 * i, 0.7 * i));
        prod *= t.back();
    }
    t.push_back(c.p * c.q / prod);
    QuadratureOptions opt;
    opt.tol = 1e-9;
    for (auto _ : state) benchmark::DoNotOptimize(i_c(n, t, c, opt).value);
}
BENCHMARK(BM_TypeICIntegral)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
