// Benchmarks for the performance-sensitive kernels: field arithmetic,
// linearized evaluation, value-table point counting and the affine-linear
// automorphism search.

#include <benchmark/benchmark.h>

#include "amcurve/autgroup.hpp"
#include "amcurve/curve.hpp"
#include "amcurve/quotient.hpp"

using namespace amc;

namespace {

LinearizedPoly lp(const FieldPtr& f, std::int64_t p, int n, std::vector<std::int64_t> s) {
    std::vector<FieldElement> c;
    for (auto v : s) c.push_back(f->from_int(v));
    return LinearizedPoly(p, n, std::move(c));
}

AMCurve classical() {
    auto f3 = make_field(3, 1, 0);
    return new_am_curve(lp(f3, 3, 1, {-1, 1}), lp(f3, 3, 1, {-1, 1}));
}

void BM_FieldMul(benchmark::State& state) {
    auto f = make_field(5, static_cast<int>(state.range(0)), 0);
    FieldElement a = f->element_at(f->order() / 3);
    FieldElement b = f->element_at(f->order() / 7 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(8);

void BM_FieldInverse(benchmark::State& state) {
    auto f = make_field(5, static_cast<int>(state.range(0)), 0);
    FieldElement a = f->element_at(f->order() / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_FieldInverse)->Arg(2)->Arg(4)->Arg(8);

void BM_EvalLinearized(benchmark::State& state) {
    auto f3 = make_field(3, 1, 0);
    auto target = make_field(3, static_cast<int>(state.range(0)), 0);
    LinearizedPoly l = lift(lp(f3, 3, 1, {-1, 1}), target);
    FieldElement x = target->element_at(target->order() - 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(l, x));
    }
}
BENCHMARK(BM_EvalLinearized)->Arg(4)->Arg(8);

void BM_RationalPlacesAM(benchmark::State& state) {
    AMCurve c = classical();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rational_places(c, k));
    }
    state.SetItemsProcessed(state.iterations() * (1LL << (2 * k))); // ~Q0^k table entries
}
BENCHMARK(BM_RationalPlacesAM)->Arg(5)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RationalPlacesZ(benchmark::State& state) {
    auto f5 = make_field(5, 1, 0);
    ZCurve z = z_curve(lp(f5, 5, 1, {-1, 1}), f5->zero());
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rational_places(z, k));
    }
}
BENCHMARK(BM_RationalPlacesZ)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_KernelLadder(benchmark::State& state) {
    auto fq = make_field(3, 2, 0);
    for (auto _ : state) {
        LinearizedPoly l = random_separable(3, 1, fq, 2, static_cast<std::uint64_t>(state.iterations()));
        benchmark::DoNotOptimize(kernel(l).roots.size());
    }
}
BENCHMARK(BM_KernelLadder)->Unit(benchmark::kMillisecond);

void BM_LinearAutSearch(benchmark::State& state) {
    AMCurve c = classical();
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linear_aut_search(c, d).maps.size());
    }
}
BENCHMARK(BM_LinearAutSearch)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClaimedGroup(benchmark::State& state) {
    auto f9 = make_field(3, 2, 0);
    AMCurve c = new_am_curve(lp(f9, 3, 2, {-1, 1}), lp(f9, 3, 2, {-1, 1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(claimed_group(c).order());
    }
}
BENCHMARK(BM_ClaimedGroup)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
