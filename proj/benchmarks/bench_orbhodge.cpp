#include "generators.hpp"

#include <benchmark/benchmark.h>

using namespace orbhodge;
using namespace orbhodge::testing;

namespace {

void BM_Rank(benchmark::State &state) {
    Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    QiMatrix m = random_gauss_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_WeightFiltration(benchmark::State &state) {
    Rng rng(2);
    std::vector<QiMatrix> inputs;
    for (int t = 0; t < 16; ++t) inputs.push_back(random_nilpotent(rng, static_cast<unsigned>(state.range(0))).n);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(weight_filtration(NilpotentOperator(inputs[i++ % inputs.size()])));
}
BENCHMARK(BM_WeightFiltration)->Arg(4)->Arg(8);

LatticePolytope p11226() {
    return {4, int_vectors({{11, -1, -1, -1}, {-1, -1, 5, -1}, {-1, 5, -1, -1}, {-1, -1, -1, -1}, {-1, -1, -1, 1}})};
}

void BM_PolarDual(benchmark::State &state) {
    auto p = p11226();
    for (auto _ : state) benchmark::DoNotOptimize(polar_dual(p));
}
BENCHMARK(BM_PolarDual);

void BM_HlcVerdict(benchmark::State &state) {
    auto p = p11226();
    for (auto _ : state) benchmark::DoNotOptimize(hlc_verdict(p));
}
BENCHMARK(BM_HlcVerdict)->Unit(benchmark::kMillisecond);

void BM_PureDegreesSkeleton(benchmark::State &state) {
    Rng rng(3);
    SkeletonOptions opt;
    opt.force_hlc = true;
    opt.max_n = static_cast<int>(state.range(0));
    opt.max_pairs = 4;
    OrbifoldData o = random_skeleton(rng, opt);
    for (auto _ : state) benchmark::DoNotOptimize(check_theorem_5_1(o, {Rational(1)}));
}
BENCHMARK(BM_PureDegreesSkeleton)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrbitPolarized(benchmark::State &state) {
    QiMatrix n{{0, 0}, {1, 0}};
    Bigrading b(2, {{{1, 1}, Subspace::coordinate(2, 0, 1)}, {{0, 0}, Subspace::coordinate(2, 1, 1)}});
    auto f = mhs_from_bigrading(b).hodge;
    BilinearFormData q(QiMatrix{{0, 1}, {-1, 0}}, -1);
    OrbitPoint pt{{GaussRational(1, 2)}, {NilpotentOperator(n)}};
    for (auto _ : state) benchmark::DoNotOptimize(check_orbit_polarized_at(f, pt, 1, q));
}
BENCHMARK(BM_OrbitPolarized);

} // namespace
BENCHMARK_MAIN();
