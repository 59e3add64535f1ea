#include <benchmark/benchmark.h>

#include <cmath>

#include "qflab/cohomology.hpp"
#include "qflab/e2_page.hpp"
#include "qflab/hopf.hpp"
#include "qflab/linking.hpp"
#include "qflab/rng.hpp"

using namespace qf;

namespace {

SymMatrix random_sym(int n, Rng& rng) {
    SymMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) s.set(i, k, rng.gaussian());
    return s;
}

QuadraticFamily disk_family(double s) {
    SymMatrix sz(2), sx(2);
    sz.set(0, 0, 1.0);
    sz.set(1, 1, -1.0);
    sx.set(0, 1, 1.0);
    SymMatrix base = SymMatrix::identity(2);
    base.scale(-s);
    return QuadraticFamily(ParamDomain::unit_ball(2), base, {sz, sx});
}

void BM_EigenSorted(benchmark::State& state) {
    Rng rng(42);
    SymMatrix S = random_sym(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_sorted(S));
}
BENCHMARK(BM_EigenSorted)->Arg(4)->Arg(8);

void BM_VertexSweep(benchmark::State& state) {
    HopfFamilySpec spec;
    spec.zeta = zeta_generic(0.05);
    QuadraticFamily F = hopf_family(spec);
    GridModel grid = make_grid(F.domain(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_vertices(F, grid, 1));
}
BENCHMARK(BM_VertexSweep)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DiskPairRanks(benchmark::State& state) {
    CubicalPair pair = build_cubical_pair(disk_family(0.3), 1, static_cast<int>(state.range(0)), -1.0);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_ranks(pair));
}
BENCHMARK(BM_DiskPairRanks)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_BallComplexSparseRanks(benchmark::State& state) {
    QuadraticFamily neg(ParamDomain::unit_ball(3), SymMatrix::diagonal({-1.0}),
                        {SymMatrix::zero(1), SymMatrix::zero(1), SymMatrix::zero(1)});
    CubicalPair pair = build_cubical_pair(neg, 1, static_cast<int>(state.range(0)), -1.0);
    CohomologyOptions opt;
    opt.dense_bit_budget = 0;
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_ranks(pair, opt));
}
BENCHMARK(BM_BallComplexSparseRanks)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Mod2Linking(benchmark::State& state) {
    ClosedPolyline a, b;
    int n = static_cast<int>(state.range(0));
    for (int i = 0; i <= n; ++i) {
        double t = 2.0 * 3.14159265358979323846 * i / n;
        a.push_back({std::cos(t), std::sin(t), 0.0});
        b.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
    }
    a.back() = a.front();
    b.back() = b.front();
    PolyLink link = make_poly_link(a, b);
    for (auto _ : state) benchmark::DoNotOptimize(mod2_linking(link));
}
BENCHMARK(BM_Mod2Linking)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_TraceStep(benchmark::State& state) {
    HopfFamilySpec spec;
    spec.zeta = zeta_generic(0.1);
    QuadraticFamily F = hopf_family(spec);
    auto seeds = seed_search(F, 2, 24);
    for (auto _ : state) {
        if (!seeds.empty()) benchmark::DoNotOptimize(trace_curve(F, 2, seeds[0]));
    }
}
BENCHMARK(BM_TraceStep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
