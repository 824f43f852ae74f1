#include <benchmark/benchmark.h>

#include <padic_hyper/congruence.hpp>
#include <padic_hyper/gamma.hpp>
#include <padic_hyper/residues.hpp>
#include <padic_hyper/series.hpp>

using namespace padic_hyper;

namespace {

const OrderedDatum& datum97() {
    static const OrderedDatum d = order_datum(HyperDatum::parse("1/2,1/4,7/6"), 97);
    return d;
}

void BM_GammaAnalytic(benchmark::State& state) {
    GammaContext ctx(97, 12);
    Int arg = pow_int(97, 11) + 12345;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.gamma_rep(arg));
        arg += pow_int(97, 6);  // dodge the memo cache
    }
}
BENCHMARK(BM_GammaAnalytic);

void BM_TruncatedSumF2(benchmark::State& state) {
    const auto& d = datum97();
    for (auto _ : state) benchmark::DoNotOptimize(truncated_sum(d, 2, working_digits(2)));
}
BENCHMARK(BM_TruncatedSumF2);

void BM_JValues(benchmark::State& state) {
    const auto d = order_datum(HyperDatum::parse("1/2,1/2,4/3"), 31);
    GammaContext ctx(31, 12);
    for (auto _ : state) benchmark::DoNotOptimize(j_values(d, ctx));
}
BENCHMARK(BM_JValues);

void BM_PartialFractions(benchmark::State& state) {
    const auto d = order_datum(HyperDatum::parse("1/2,1/2,7/6"), 31);
    auto [num, den] = build_R(d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(num, den, d, 2));
}
BENCHMARK(BM_PartialFractions);

}  // namespace

BENCHMARK_MAIN();
