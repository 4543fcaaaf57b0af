#include <benchmark/benchmark.h>

#include "zr/averages.hpp"
#include "zr/euler.hpp"
#include "zr/sieve.hpp"
#include "zr/test_function.hpp"
#include "zr/zeta.hpp"

using namespace zr;

namespace {

ShiftSet set_a() { return ShiftSet({{0.10, 0}}, Role::A); }
ShiftSet set_b() { return ShiftSet({{0.12, 0}}, Role::B); }
ShiftSet set_c() { return ShiftSet({{0.30, 0}}, Role::C); }
ShiftSet set_d() { return ShiftSet({{0.35, 0}}, Role::D); }

void BM_sieve_coefficients(benchmark::State& state) {
    auto A = set_a();
    auto C = set_c();
    const auto X = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto t = sieve_coefficients(A, C, X);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetItemsProcessed(state.iterations() * X);
}
BENCHMARK(BM_sieve_coefficients)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_zeta_critical_line(benchmark::State& state) {
    ZetaEvaluator ze;
    const double height = static_cast<double>(state.range(0));
    double t = 0;
    for (auto _ : state) {
        t += 0.37;
        if (t > height) t = 1.0;
        benchmark::DoNotOptimize(ze.zeta({0.5, height - t}));
    }
}
BENCHMARK(BM_zeta_critical_line)->Arg(100)->Arg(1000)->Arg(5000);

void BM_B_value(benchmark::State& state) {
    auto A = set_a();
    auto B = set_b();
    auto C = set_c();
    auto D = set_d();
    const auto cutoff = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(B_value(A, B, C, D, {1.0, 0}, cutoff));
}
BENCHMARK(BM_B_value)->Arg(1000)->Arg(10000);

void BM_truncated_pair_sum(benchmark::State& state) {
    static TestFunction psi;
    ExperimentConfig cfg;
    cfg.A = set_a();
    cfg.B = set_b();
    cfg.C = set_c();
    cfg.D = set_d();
    cfg.T = static_cast<double>(state.range(0));
    cfg.psi = &psi;
    for (auto _ : state) benchmark::DoNotOptimize(truncated_lhs(cfg));
}
BENCHMARK(BM_truncated_pair_sum)->Arg(500)->Arg(1000)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
